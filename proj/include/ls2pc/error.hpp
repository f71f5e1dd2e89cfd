#pragma once

#include <stdexcept>
#include <string>

namespace ls2pc {

enum class ErrorCode {
  DimensionMismatch,
  InvalidArgument,
  NotUnit,
  RankDeficient,
  NotPositiveDefinite,
  NoConvergence,
  ConditionViolated,
  WindowAtFloor,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ls2pc
