#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mtrees/tablecli.hpp"
#include "mtrees/trees.hpp"

using namespace mtrees;
using namespace mtrees::cli;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "mtrees");
  std::ostringstream out;
  std::ostringstream err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("trees subcommand") {
  const Outcome bfile = run({"trees", "--m", "2", "--n-max", "10", "--format", "bfile"});
  CHECK(bfile.status == kExitOk);
  CHECK(bfile.out ==
        "1 1\n2 1\n3 2\n4 5\n5 16\n6 61\n7 272\n8 1385\n9 7936\n10 50521\n");

  const Outcome csv = run({"trees", "--m", "1", "--n-max", "5", "--format", "csv"});
  CHECK(csv.out == "1,1,1,1,1\n");

  const Outcome grid = run({"trees", "--m-max", "2", "--n-max", "4"});
  CHECK(grid.out == "m,1,2,3,4\n1,1,1,1,1\n2,1,1,2,5\n");
}

TEST_CASE("paper-layout tables match the golden files") {
  const Outcome t2 =
      run({"trees", "--m-max", "9", "--n-max", "10", "--paper-layout", "--format", "markdown"});
  CHECK(t2.status == kExitOk);
  CHECK(t2.out == read_file(MTREES_GOLDEN_DIR "/table2.md"));

  const Outcome t1 =
      run({"chromatic", "--m-max", "9", "--n-max", "9", "--paper-layout", "--format", "markdown"});
  CHECK(t1.status == kExitOk);
  CHECK(t1.out == read_file(MTREES_GOLDEN_DIR "/table1.md"));

  // Table 1 has no blanks, so paper layout and default coincide.
  CHECK(run({"chromatic", "--format", "markdown"}).out == t1.out);
}

TEST_CASE("latex layout has the tabular skeleton") {
  const Outcome t = run({"trees", "--m-max", "2", "--n-max", "3", "--paper-layout", "--format", "latex"});
  CHECK(t.out ==
        "\\begin{tabular}{c|rr}\n$m \\backslash n$ & 2 & 3 \\\\\n\\hline\n"
        "1 & 1 & 1 \\\\\n2 &  & 2 \\\\\n\\end{tabular}\n");
}

TEST_CASE("chromatic subcommand") {
  CHECK(run({"chromatic", "--m", "1", "--n-max", "4", "--lambda", "3"}).out == "3,6,6,0\n");
  CHECK(run({"chromatic", "--m", "2", "--n-max", "3", "--lambda", "0"}).out == "0,0,0\n");
  CHECK(run({"chromatic", "--m", "2", "--n-max", "9"}).out ==
        "-1,1,0,-6,30,-90,0,2520,-22680\n");
  const Outcome checked =
      run({"chromatic", "--m-max", "3", "--n-max", "6", "--lambda", "4", "--oracle-check"});
  CHECK(checked.status == kExitOk);
}

TEST_CASE("gessel subcommand") {
  CHECK(run({"gessel", "--m", "1", "--n-max", "5"}).out == "1,1,2,6,24,120\n");
  CHECK(run({"gessel", "--m", "2", "--n-max", "9"}).out == "1,1,1,1,2,10,50,210,840,4200\n");
  const Outcome three = run({"gessel", "--m", "3", "--n-max", "7", "--format", "bfile", "--oracle-check"});
  CHECK(three.status == kExitOk);
  CHECK(parse_bfile(three.out).back() == std::pair<long, ExactInt>{7, 14});
  CHECK(parse_bfile(three.out).front().first == 0);
}

TEST_CASE("bell and series subcommands") {
  CHECK(run({"bell", "--n", "4", "--k", "2", "--args", "ones:2"}).out == "3\n");
  CHECK(run({"bell", "--n", "2", "--k", "1", "--args", "1/2,1/3", "--oracle-check"}).out == "1/3\n");
  CHECK(run({"series", "--op", "recip", "--coeffs", "1,-1", "--order", "5"}).out ==
        "1,1,2,6,24,120\n");
  CHECK(run({"series", "--op", "compinv", "--coeffs", "0,1,1,1,1", "--order", "4"}).out ==
        "0,1,-1,2,-6\n");
  CHECK(run({"series", "--op", "integrate", "--coeffs", "3,5,7"}).out == "0,3,5,7\n");
  CHECK(run({"series", "--op", "derive", "--coeffs", "1,1,1,1"}).out == "1,1,1\n");
  CHECK(run({"series", "--op", "compose", "--coeffs", "0,1,1,1", "--inner", "0,1,1,1",
             "--oracle-check"})
            .out == "0,1,2,5\n");
  CHECK(run({"series", "--op", "recip", "--coeffs", "2", "--order", "1", "--dump-series"}).out ==
        "order 1\n1/2\n0\n");
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run({}).status == kExitUsage);
  CHECK(run({"trees", "--m", "0"}).status == kExitUsage);
  CHECK(run({"trees", "--n-max", "0"}).status == kExitUsage);
  CHECK(run({"trees", "--m", "2", "--m-max", "3"}).status == kExitUsage);
  CHECK(run({"trees", "--format", "xml"}).status == kExitUsage);
  CHECK(run({"trees", "--m-max", "3", "--format", "bfile"}).status == kExitUsage);
  CHECK(run({"bell", "--n", "2", "--k", "1", "--args", "1/0"}).status == kExitUsage);
  CHECK(run({"bell", "--n", "2", "--k", "1", "--args", "x"}).status == kExitUsage);
  CHECK(run({"series", "--op", "cube", "--coeffs", "1"}).status == kExitUsage);
  CHECK(run({"series", "--op", "recip", "--coeffs", "0,1"}).status == kExitUsage);
  CHECK(run({"chromatic", "--lambda", "two"}).status == kExitUsage);
  CHECK(run({"trees", "--help"}).status == kExitOk);
}

TEST_CASE("oracle check passes on the published grid") {
  const Outcome t = run({"trees", "--m-max", "9", "--n-max", "10", "--oracle-check"});
  CHECK(t.status == kExitOk);
  CHECK(t.err.empty());
}

TEST_CASE("output is deterministic across runs") {
  const std::vector<std::string> args{"trees", "--m-max", "9", "--n-max", "14", "--format", "csv"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("default format comes from the environment") {
  ::setenv(kFormatEnv, "bfile", 1);
  CHECK(run({"gessel", "--m", "1", "--n-max", "2"}).out == "0 1\n1 1\n2 2\n");
  ::setenv(kFormatEnv, "bogus", 1);
  CHECK(run({"gessel", "--m", "1", "--n-max", "2"}).status == kExitUsage);
  ::unsetenv(kFormatEnv);
}

TEST_CASE("bfile output parses back to the same sequence") {
  for (unsigned m = 1; m <= 6; ++m) {
    const Outcome o = run({"trees", "--m", std::to_string(m), "--n-max", "14", "--format", "bfile"});
    const auto parsed = parse_bfile(o.out);
    const TreeCountRow row = count_mary_trees(m, 14);
    REQUIRE(parsed.size() == 14);
    for (unsigned n = 1; n <= 14; ++n) {
      CHECK(parsed[n - 1].first == static_cast<long>(n));
      CHECK(parsed[n - 1].second == row.at(n));
    }
  }
  CHECK_THROWS_AS(parse_bfile("1 2 3\n"), Error);
  CHECK(parse_bfile("# comment\n\n5 -7\n").front().second == -7);
}

TEST_CASE("ratio lists expand ones:m") {
  const auto v = parse_ratio_list("1/2,ones:2,-3");
  REQUIRE(v.size() == 4);
  CHECK(v[0] == ExactRatio(1, 2));
  CHECK(v[1] == 1);
  CHECK(v[2] == 1);
  CHECK(v[3] == -3);
  CHECK_THROWS_AS(parse_ratio_list("ones:0"), Error);
  CHECK_THROWS_AS(parse_ratio_list("1,,2"), Error);
}
