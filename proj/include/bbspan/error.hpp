#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bbspan {

enum class ErrorCode {
  NotNondecreasing,
  DegenerateDomain,
  InnerMultiplicityTooHigh,
  LengthMismatch,
  OutOfDomain,
  EmptySpan,
  IndexOutOfRange,
  DegreeZero,
  UnsupportedConfluency,
  OutOfSpan,
  InvalidArgument,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotNondecreasing: return "NotNondecreasing";
    case ErrorCode::DegenerateDomain: return "DegenerateDomain";
    case ErrorCode::InnerMultiplicityTooHigh: return "InnerMultiplicityTooHigh";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::EmptySpan: return "EmptySpan";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::UnsupportedConfluency: return "UnsupportedConfluency";
    case ErrorCode::OutOfSpan: return "OutOfSpan";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Library error. `what()` is prefixed with the code name so that CLI
/// messages are greppable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bbspan
