#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace convexity {

enum class ErrorCode {
  EmptyShape,
  InvariantViolation,
  SingletonShape,
  ZeroAreaShape,
  PitchTooCoarse,
  ErodedToEmpty,
  AcceptanceTooLow,
  BadP,
  NoFormula,
  BadGridSpec,
  UnknownMeasure,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Error raised by every library operation. The code identifies the violated
/// precondition; the message names the offending input element.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// Domain errors are the ones a well-formed input can still trigger
  /// (single-point shapes, zero-area shapes where area is required, ...).
  bool is_domain_error() const noexcept;

 private:
  ErrorCode code_;
};

}  // namespace convexity
