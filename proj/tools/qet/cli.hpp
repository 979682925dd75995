#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qet/analysis.hpp"
#include "qet/model.hpp"

namespace qet::cli {

enum class Command { Efficiency, Sweep, Figure, Verify, NOpt, Bell, Fixtures };
enum class Format { Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Bad flags, malformed ranges or a missing argument. Maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was given; the payload is the help text. Maps to exit status 0.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::Efficiency;
  /// Empty means standard output. For `figure all` this names a directory.
  std::string output_path;
  Format format = Format::Csv;
  unsigned oracle_cap = kDefaultOracleCap;
  unsigned threads = 1;
  std::optional<std::uint64_t> seed;

  std::vector<std::uint64_t> ns;
  std::optional<std::vector<std::uint64_t>> ms;
  std::vector<double> ratios;
  double h = 1.0;
  std::optional<std::vector<std::uint64_t>> outputs;
  std::optional<double> alpha;
  bool bell = false;
  bool oracle = false;
  std::optional<std::uint64_t> sample_shots;
  std::uint64_t n_max = 10;

  /// Empty for `figure all`.
  std::optional<FigureId> figure;
};

/// Parses the arguments following the program name. A `--config FILE` of
/// key=value lines is read first; explicit flags override it. QET_ORACLE_CAP
/// overrides the config file but not --oracle-cap. Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Executes one command. Results go to `out` unless output_path is set;
/// diagnostics go to `err`. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run, with usage errors reported on `err`.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `1:5`, `2,4,8` or a single value.
std::vector<std::uint64_t> parse_integer_list(const std::string& text);
/// Comma-separated list of reals.
std::vector<double> parse_real_list(const std::string& text);
/// `lo:hi[:per_decade]` decade exponents, 50 points per decade by default.
std::vector<double> parse_log_range(const std::string& text);

}  // namespace qet::cli
