#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lcak {

enum class ErrorCode {
  IndexOutOfRange,
  DimensionMismatch,
  DegenerateMetric,
  NondegeneracyFailure,
  NotLCS,
  NotFirstKind,
  UnsupportedDimension,
  PreconditionFailed,
  Degenerate,
  ParseError,
  ValidationError,
};

const char* to_string(ErrorCode code);

// Every failure raised by lcak. `reason()` is a stable machine-readable tag
// such as "J_NOT_ACS"; `field()` and `line()` locate the offending input when
// the error originates from a spec file (line 0 means unknown).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string reason, const std::string& message,
        std::string field = {}, int line = 0)
      : std::runtime_error(message),
        code_(code),
        reason_(std::move(reason)),
        field_(std::move(field)),
        line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& reason() const noexcept { return reason_; }
  const std::string& field() const noexcept { return field_; }
  int line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::string reason_;
  std::string field_;
  int line_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, to_string(code), message);
}

}  // namespace lcak
