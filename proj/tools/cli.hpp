#pragma once

// Command-line front end: argument parsing and command execution, kept apart
// from main() so both are testable.

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace burnside::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCheckFailed = 2;
inline constexpr int kExitCertification = 3;
inline constexpr int kExitUsage = 64;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Command {
  std::string verb;  ///< eval, certify-am, verify-cm, verify-lcm, regions, bounds, compare, report, help
  std::string help_text;

  std::string function;
  std::string kernel;
  std::string claim;
  std::vector<std::string> specs;
  bool theorem1 = false;
  bool theorem2 = false;
  bool all = false;
  unsigned item = 0;

  std::vector<std::string> xs;
  /// alpha, lambda, p, q, r, k as given.
  std::map<std::string, std::string> params;
  std::string tol = "1e-12";

  std::string step = "0.125";
  /// Grid size; default 64 for verify-cm/-lcm, 200 for regions and bounds.
  std::optional<unsigned> count;
  std::optional<std::string> start;
  unsigned max_order = 0;  ///< 0: verb default (8 for CM, 6 for LCM)
  int sign = 1;
  bool reciprocal = false;
  unsigned digits = 40;

  unsigned max_depth = 64;

  std::string family;
  std::string side = "upper";
  std::optional<std::string> lo, hi;

  std::string format;  ///< csv or json
  std::string out;
  bool no_header = false;
};

/// argv without the program name. Throws UsageError for unknown verbs or
/// flags, missing verb-specific options and digits < 25 for the monotonicity
/// verbs. "--help" yields verb "help" with the help text.
Command parse_args(const std::vector<std::string>& args);

/// Runs a parsed command. Payload goes to `out` (or the --out file),
/// diagnostics to `err`. Returns the exit code.
int execute(const Command& command, std::ostream& out, std::ostream& err);

/// parse_args + execute with usage errors mapped to 64.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace burnside::cli
