#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ls2pc::cli {

/// Process exit statuses of the `ls2pc` tool.
enum ExitCode : int {
  kOk = 0,
  /// A check ran and failed (compare above tolerance, rate outside the band).
  kCheckFailed = 1,
  /// Bad flags, unreadable or malformed input.
  kUsage = 2,
  /// The initial basis violates rank(U0^T Ud) = d.
  kConditionViolated = 3,
  /// No rate is defined: repeated singular values or a window at the noise floor.
  kNoRate = 4,
  /// Numerical failure inside the library.
  kNumerical = 5,
};

/// Runs one subcommand (generate, fit, compare, rate). `args` excludes the
/// program name. JSON goes to --out when given, otherwise to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ls2pc::cli
