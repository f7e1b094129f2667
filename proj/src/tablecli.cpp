#include "mtrees/tablecli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mtrees/bell.hpp"
#include "mtrees/chromatic.hpp"
#include "mtrees/egf.hpp"
#include "mtrees/trees.hpp"

namespace mtrees::cli {

namespace {

constexpr unsigned kTreeOracleMaxN = 10;

[[noreturn]] void usage_error(const std::string& what) { throw CliError(kExitUsage, what); }
[[noreturn]] void mismatch(const std::string& what) { throw CliError(kExitOracleMismatch, what); }

std::vector<unsigned> rows_of(const RunConfig& c) {
  std::vector<unsigned> rows;
  if (c.m) {
    rows.push_back(*c.m);
  } else {
    for (unsigned m = 1; m <= c.m_max; ++m) rows.push_back(m);
  }
  return rows;
}

std::vector<std::string> to_strings(const std::vector<ExactInt>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::vector<std::string> to_strings(std::span<const ExactRatio> values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

// Matrix output of per-m rows; cell n of row m is values[m][n - 1].
std::string emit_rows(const RunConfig& c, const std::vector<unsigned>& rows,
                      const std::vector<std::vector<ExactInt>>& values, long first_index,
                      unsigned first_col, bool blank_saturated) {
  if (c.m && !c.paper_layout) return format_sequence(to_strings(values.front()), first_index, c.format);
  if (c.format == OutputFormat::bfile) usage_error("bfile output needs a single sequence (--m)");

  std::vector<unsigned> cols;
  for (unsigned n = first_col; n <= c.n_max; ++n) cols.push_back(n);
  std::vector<std::vector<std::optional<std::string>>> cells;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<std::optional<std::string>> row;
    for (unsigned n : cols) {
      if (blank_saturated && n <= rows[r]) {
        row.emplace_back();
      } else {
        row.emplace_back(to_string(values[r][n - static_cast<unsigned>(first_index)]));
      }
    }
    cells.push_back(std::move(row));
  }
  return format_matrix(rows, cols, cells, c.format);
}

ArgSeq parse_args(std::string_view text) {
  std::vector<ExactRatio> values = parse_ratio_list(text);
  if (values.empty()) usage_error("--args needs at least one value");
  return ArgSeq(std::move(values));
}

EgfSeries parse_series(std::string_view text, std::optional<unsigned> order) {
  std::vector<ExactRatio> values = parse_ratio_list(text);
  if (values.empty()) usage_error("series needs at least one coefficient");
  EgfSeries s(std::move(values));
  return order ? s.resized(*order) : s;
}

std::string markdown_row(const std::vector<std::string>& cells) {
  std::string line = "|";
  for (const auto& c : cells) line += " " + c + " |";
  return line + "\n";
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "markdown") return OutputFormat::markdown;
  if (name == "bfile") return OutputFormat::bfile;
  if (name == "latex") return OutputFormat::latex;
  return std::nullopt;
}

std::vector<ExactRatio> parse_ratio_list(std::string_view text) {
  std::vector<ExactRatio> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (item.starts_with("ones:")) {
      const ExactInt count = parse_int(item.substr(5));
      if (count < 1 || count > 100000) {
        throw Error(Errc::parse_error, "ones:m needs 1 <= m <= 100000");
      }
      out.insert(out.end(), count.get_ui(), ExactRatio(1));
    } else {
      out.push_back(parse_ratio(item));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_sequence(const std::vector<std::string>& values, long first_index,
                            OutputFormat format) {
  std::string out;
  switch (format) {
    case OutputFormat::csv:
      for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i];
      out += "\n";
      break;
    case OutputFormat::bfile:
      for (std::size_t i = 0; i < values.size(); ++i) {
        out += std::to_string(first_index + static_cast<long>(i)) + " " + values[i] + "\n";
      }
      break;
    case OutputFormat::markdown:
      out += "| n | value |\n|---:|---:|\n";
      for (std::size_t i = 0; i < values.size(); ++i) {
        out += markdown_row({std::to_string(first_index + static_cast<long>(i)), values[i]});
      }
      break;
    case OutputFormat::latex:
      out += "\\begin{tabular}{r|r}\n$n$ & value \\\\\n\\hline\n";
      for (std::size_t i = 0; i < values.size(); ++i) {
        out += std::to_string(first_index + static_cast<long>(i)) + " & " + values[i] + " \\\\\n";
      }
      out += "\\end{tabular}\n";
      break;
  }
  return out;
}

std::string format_matrix(const std::vector<unsigned>& row_labels,
                          const std::vector<unsigned>& col_labels,
                          const std::vector<std::vector<std::optional<std::string>>>& cells,
                          OutputFormat format) {
  std::string out;
  switch (format) {
    case OutputFormat::bfile:
      usage_error("bfile output needs a single sequence (--m)");
    case OutputFormat::csv: {
      out += "m";
      for (unsigned n : col_labels) out += "," + std::to_string(n);
      out += "\n";
      for (std::size_t r = 0; r < row_labels.size(); ++r) {
        out += std::to_string(row_labels[r]);
        for (const auto& cell : cells[r]) out += "," + cell.value_or("");
        out += "\n";
      }
      break;
    }
    case OutputFormat::markdown: {
      std::vector<std::string> header{"m \\ n"};
      std::vector<std::string> rule{"---"};
      for (unsigned n : col_labels) {
        header.push_back(std::to_string(n));
        rule.emplace_back("---:");
      }
      out += markdown_row(header);
      out += markdown_row(rule);
      for (std::size_t r = 0; r < row_labels.size(); ++r) {
        std::vector<std::string> line{std::to_string(row_labels[r])};
        for (const auto& cell : cells[r]) line.push_back(cell.value_or(""));
        out += markdown_row(line);
      }
      break;
    }
    case OutputFormat::latex: {
      out += "\\begin{tabular}{c|" + std::string(col_labels.size(), 'r') + "}\n";
      out += "$m \\backslash n$";
      for (unsigned n : col_labels) out += " & " + std::to_string(n);
      out += " \\\\\n\\hline\n";
      for (std::size_t r = 0; r < row_labels.size(); ++r) {
        out += std::to_string(row_labels[r]);
        for (const auto& cell : cells[r]) out += " & " + cell.value_or("");
        out += " \\\\\n";
      }
      out += "\\end{tabular}\n";
      break;
    }
  }
  return out;
}

std::vector<std::pair<long, ExactInt>> parse_bfile(std::string_view text) {
  std::vector<std::pair<long, ExactInt>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    std::string index;
    std::string value;
    std::string extra;
    if (!(fields >> index >> value) || (fields >> extra)) {
      throw Error(Errc::parse_error, "b-file line needs 'index value': '" + line + "'");
    }
    out.emplace_back(parse_int(index).get_si(), parse_int(value));
  }
  return out;
}

std::string run_trees(const RunConfig& c) {
  if (c.paper_layout && c.m) usage_error("--paper-layout renders the full table; drop --m");
  const std::vector<unsigned> rows = rows_of(c);
  std::vector<std::vector<ExactInt>> values;
  for (unsigned m : rows) values.push_back(count_mary_trees(m, c.n_max).counts());

  if (c.oracle_check) {
    const unsigned limit = static_cast<unsigned>(std::min<std::uint64_t>(
        c.oracle_bound.value_or(kTreeOracleMaxN), kTreeOracleMaxN));
    InsertionOptions options;
    options.bound = limit;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (unsigned n = 1; n <= std::min(c.n_max, limit); ++n) {
        const ExactInt expected = insertion_enum_oracle(rows[r], n, options);
        if (expected != values[r][n - 1]) {
          mismatch("T_" + std::to_string(n) + "(" + std::to_string(rows[r]) + ") = " +
                   to_string(values[r][n - 1]) + " but insertion enumeration gives " +
                   to_string(expected));
        }
      }
    }
  }
  return emit_rows(c, rows, values, 1, c.paper_layout ? 2 : 1, c.paper_layout);
}

std::string run_chromatic(const RunConfig& c) {
  if (c.paper_layout && c.m) usage_error("--paper-layout renders the full table; drop --m");
  const std::vector<unsigned> rows = rows_of(c);
  std::vector<std::vector<ExactInt>> values;
  for (unsigned m : rows) {
    std::vector<ExactInt> row;
    if (c.lambda == -1) {
      const std::vector<ExactInt> direct = chromatic_at_minus_one_row(m, c.n_max);
      row.assign(direct.begin() + 1, direct.end());
    } else {
      for (unsigned n = 1; n <= c.n_max; ++n) {
        row.push_back(eval_falling(degree_chromatic_complete(m, n), c.lambda));
      }
    }
    values.push_back(std::move(row));
  }

  if (c.oracle_check) {
    const std::uint64_t bound = c.oracle_bound.value_or(kDefaultColoringBound);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (unsigned n = 1; n <= c.n_max; ++n) {
        const FallingPoly poly = degree_chromatic_complete(rows[r], n);
        const ExactInt via_poly = eval_falling(poly, c.lambda);
        if (via_poly != values[r][n - 1]) {
          mismatch("falling-factorial evaluation disagrees at m=" + std::to_string(rows[r]) +
                   ", n=" + std::to_string(n));
        }
        if (c.lambda < 0 || !c.lambda.fits_uint_p()) continue;
        const unsigned lambda = static_cast<unsigned>(c.lambda.get_ui());
        ExactInt colorings;
        mpz_ui_pow_ui(colorings.get_mpz_t(), lambda, n);
        if (colorings > ExactInt(std::to_string(bound))) continue;
        const ExactInt brute = coloring_count_oracle(rows[r], n, lambda, bound);
        if (brute != values[r][n - 1]) {
          mismatch("coloring enumeration gives " + to_string(brute) + " at m=" +
                   std::to_string(rows[r]) + ", n=" + std::to_string(n));
        }
      }
    }
  }
  return emit_rows(c, rows, values, 1, 1, false);
}

std::string run_gessel(const RunConfig& c) {
  if (!c.m) usage_error("gessel needs --m");
  const std::vector<ExactInt> a = gessel_sequence(*c.m, c.n_max);
  if (c.oracle_check) {
    const std::vector<ExactInt> chi = chromatic_at_minus_one_row(2 * *c.m - 1, c.n_max);
    for (unsigned n = 1; n <= c.n_max; ++n) {
      const ExactInt expected = (n % 2 == 0) ? a[n] : ExactInt(-a[n]);
      if (chi[n] != expected) {
        mismatch("sign identity fails at n=" + std::to_string(n) + ": chi = " + to_string(chi[n]) +
                 ", a_n = " + to_string(a[n]));
      }
    }
  }
  return format_sequence(to_strings(a), 0, c.format);
}

std::string run_bell(const RunConfig& c) {
  const ArgSeq args = parse_args(c.args);
  const ExactRatio value = bell(c.bell_n, c.bell_k, args);
  if (c.oracle_check && c.bell_n <= kDefaultBellOracleBound) {
    const ExactRatio check = bell_definition_sum(c.bell_n, c.bell_k, args);
    if (check != value) mismatch("definition sum gives " + to_string(check));
  }
  return to_string(value) + "\n";
}

std::string run_series(const RunConfig& c) {
  const EgfSeries x = parse_series(c.coeffs, c.order);
  EgfSeries result = x;
  std::optional<EgfSeries> check;
  if (c.op == "recip") {
    result = egf_reciprocal_bell(x);
    if (c.oracle_check) check = egf_reciprocal_oracle(x);
  } else if (c.op == "compinv") {
    result = egf_comp_inverse_bell(x);
    if (c.oracle_check) check = egf_comp_inverse_oracle(x);
  } else if (c.op == "integrate") {
    result = egf_integrate(x);
  } else if (c.op == "derive") {
    result = egf_derivative(x);
  } else if (c.op == "compose") {
    if (c.inner.empty()) usage_error("compose needs --inner");
    const EgfSeries inner = parse_series(c.inner, c.order ? *c.order : static_cast<unsigned>(x.order()));
    result = egf_compose(x, inner);
    if (c.oracle_check) check = egf_compose_powers(x, inner);
  } else {
    usage_error("unknown --op '" + c.op + "'");
  }
  if (check && *check != result) mismatch("iterative oracle disagrees with the Bell form");
  if (c.dump_series) return to_text(result);
  return format_sequence(to_strings(result.coeffs()), 0, c.format);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::string format_name;
  if (const char* env = std::getenv(kFormatEnv); env != nullptr && *env != '\0') format_name = env;
  std::string lambda_text = "-1";

  CLI::App app{"Exact counts of m-ary increasing trees and degree-chromatic polynomials", "mtrees"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "csv, markdown, bfile or latex")
        ->check(CLI::IsMember({"csv", "markdown", "bfile", "latex"}));
    sub->add_flag("--oracle-check", config.oracle_check, "Cross-check against brute-force oracles");
  };
  auto add_grid = [&](CLI::App* sub) {
    auto* m = sub->add_option("--m", config.m, "Single row m")->check(CLI::Range(1u, 1000u));
    auto* mm = sub->add_option("--m-max", config.m_max, "Rows 1..m-max")->check(CLI::Range(1u, 1000u));
    m->excludes(mm);
    sub->add_option("--n-max", config.n_max, "Largest n")->check(CLI::Range(1u, 1000u));
    sub->add_flag("--paper-layout", config.paper_layout, "Reproduce the published table layout");
    sub->add_option("--oracle-bound", config.oracle_bound, "Oracle enumeration bound");
    add_format(sub);
  };

  auto* trees = app.add_subcommand("trees", "T_n(m), the number of m-ary increasing trees");
  auto* chromatic = app.add_subcommand("chromatic", "chi_m(K_n, lambda), default lambda = -1");
  auto* gessel = app.add_subcommand("gessel", "a_n(m) from the alternating exponential partial sum");
  auto* bell_cmd = app.add_subcommand("bell", "Partial Bell polynomial B_{n,k}(args)");
  auto* series = app.add_subcommand("series", "Truncated EGF operations");

  add_grid(trees);
  add_grid(chromatic);
  chromatic->add_option("--lambda", lambda_text, "Evaluation point (exact integer)");

  gessel->add_option("--m", config.m, "m >= 1")->required()->check(CLI::Range(1u, 1000u));
  gessel->add_option("--n-max", config.n_max, "Largest n")->check(CLI::Range(0u, 1000u));
  add_format(gessel);

  bell_cmd->add_option("--n", config.bell_n)->required()->check(CLI::Range(0u, 1000u));
  bell_cmd->add_option("--k", config.bell_k)->required()->check(CLI::Range(0u, 1000u));
  bell_cmd->add_option("--args", config.args, "x_1,x_2,... or ones:m")->required();
  bell_cmd->add_flag("--oracle-check", config.oracle_check);

  series->add_option("--op", config.op)
      ->required()
      ->check(CLI::IsMember({"recip", "compinv", "integrate", "derive", "compose"}));
  series->add_option("--coeffs", config.coeffs, "c_0,c_1,... in the t^n/n! basis")->required();
  series->add_option("--inner", config.inner, "Inner series for compose");
  series->add_option("--order", config.order, "Truncation order")->check(CLI::Range(0u, 1000u));
  series->add_flag("--dump-series", config.dump_series, "Emit the 'order N' text form");
  add_format(series);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!format_name.empty()) {
      const auto format = parse_format(format_name);
      if (!format) usage_error("unknown format '" + format_name + "'");
      config.format = *format;
    }
    config.lambda = parse_int(lambda_text);

    std::string text;
    if (trees->parsed()) {
      config.subcommand = "trees";
      if (trees->count("--n-max") == 0) config.n_max = 10;
      text = run_trees(config);
    } else if (chromatic->parsed()) {
      config.subcommand = "chromatic";
      if (chromatic->count("--n-max") == 0) config.n_max = 9;
      text = run_chromatic(config);
    } else if (gessel->parsed()) {
      config.subcommand = "gessel";
      if (gessel->count("--n-max") == 0) config.n_max = 10;
      text = run_gessel(config);
    } else if (bell_cmd->parsed()) {
      config.subcommand = "bell";
      text = run_bell(config);
    } else {
      config.subcommand = "series";
      text = run_series(config);
    }
    out << text;
    return kExitOk;
  } catch (const CliError& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::oracle_mismatch ? kExitOracleMismatch : kExitUsage;
  }
}

}  // namespace mtrees::cli
