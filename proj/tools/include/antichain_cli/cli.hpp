#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace antichain::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitOperation = 1;
inline constexpr int kExitVerification = 2;
inline constexpr int kExitUsage = 64;

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024u;

// Bad or missing arguments; reported with exit code 64.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::string subcommand;

  std::optional<std::string> points;   // point-set file
  std::optional<std::string> surface;  // family name or descriptor file

  std::optional<std::size_t> n;
  std::optional<std::int64_t> m;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> level;
  std::optional<std::size_t> axis;  // 1-based
  std::optional<double> p;
  std::optional<double> epsilon;
  std::optional<double> c;
  std::optional<double> intercept;
  std::optional<int> depth;

  std::vector<double> gradient;
  std::vector<double> x;
  std::vector<double> p_list;
  std::vector<std::int64_t> m_list;

  std::string order = "strict";  // strict | strong
  bool inverse = false;
  bool vertices = false;
  std::size_t pairs = 0;
  double tol = 0.0;  // 0 keeps the library default

  std::uint64_t seed = kDefaultSeed;
  std::optional<std::uint64_t> budget;  // unset keeps each operation's default
  unsigned threads = 0;

  std::optional<std::string> out;
  std::string format = "json";  // json | csv
};

struct ParseResult {
  std::optional<ExperimentConfig> config;  // empty when parsing ended early
  int exit_code = kExitOk;
};

// Parses argv-style arguments (without the program name). Help and usage
// messages go to `out` and `err`.
ParseResult parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Runs one experiment. Reports go to config.out when set, otherwise to `out`.
int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

// parse_args followed by run.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace antichain::cli
