#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mtrees/exact.hpp"

namespace mtrees::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitOracleMismatch = 3;

/// Environment variable consulted for the default --format.
inline constexpr const char* kFormatEnv = "MTREES_FORMAT";

enum class OutputFormat { csv, markdown, bfile, latex };

std::optional<OutputFormat> parse_format(std::string_view name);

struct RunConfig {
  std::string subcommand;
  std::optional<unsigned> m;  // single row; otherwise rows 1..m_max
  unsigned m_max = 9;
  unsigned n_max = 10;
  OutputFormat format = OutputFormat::csv;
  bool paper_layout = false;
  bool oracle_check = false;
  std::optional<std::uint64_t> oracle_bound;

  ExactInt lambda = -1;  // chromatic

  unsigned bell_n = 0;  // bell
  unsigned bell_k = 0;
  std::string args;

  std::string op;  // series
  std::string coeffs;
  std::string inner;
  std::optional<unsigned> order;
  bool dump_series = false;
};

/// Carries the process exit status for a failed run.
class CliError : public std::runtime_error {
 public:
  CliError(int exit_code, const std::string& what)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

std::string run_trees(const RunConfig& config);
std::string run_chromatic(const RunConfig& config);
std::string run_gessel(const RunConfig& config);
std::string run_bell(const RunConfig& config);
std::string run_series(const RunConfig& config);

/// Full command line (args[0] is the program name). Returns the exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One value per index starting at first_index. bfile: "index value" lines.
std::string format_sequence(const std::vector<std::string>& values, long first_index,
                            OutputFormat format);

/// Rows labelled by m, columns by n; an empty optional renders as a blank cell.
std::string format_matrix(const std::vector<unsigned>& row_labels,
                          const std::vector<unsigned>& col_labels,
                          const std::vector<std::vector<std::optional<std::string>>>& cells,
                          OutputFormat format);

std::vector<std::pair<long, ExactInt>> parse_bfile(std::string_view text);

/// Comma-separated exact rationals; an item "ones:m" expands to m ones.
std::vector<ExactRatio> parse_ratio_list(std::string_view text);

}  // namespace mtrees::cli
