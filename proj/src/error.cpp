#include "convexity/error.hpp"

namespace convexity {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyShape: return "EmptyShape";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::SingletonShape: return "SingletonShape";
    case ErrorCode::ZeroAreaShape: return "ZeroAreaShape";
    case ErrorCode::PitchTooCoarse: return "PitchTooCoarse";
    case ErrorCode::ErodedToEmpty: return "ErodedToEmpty";
    case ErrorCode::AcceptanceTooLow: return "AcceptanceTooLow";
    case ErrorCode::BadP: return "BadP";
    case ErrorCode::NoFormula: return "NoFormula";
    case ErrorCode::BadGridSpec: return "BadGridSpec";
    case ErrorCode::UnknownMeasure: return "UnknownMeasure";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

bool Error::is_domain_error() const noexcept {
  switch (code_) {
    case ErrorCode::SingletonShape:
    case ErrorCode::ZeroAreaShape:
    case ErrorCode::PitchTooCoarse:
    case ErrorCode::ErodedToEmpty:
    case ErrorCode::AcceptanceTooLow:
    case ErrorCode::BadP:
    case ErrorCode::NoFormula:
      return true;
    default:
      return false;
  }
}

}  // namespace convexity
