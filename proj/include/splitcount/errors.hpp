#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace splitcount {

enum class ErrorCode {
  DimensionMismatch,
  ParseError,
  OddB,
  CharPolyMismatch,
  RankError,
  InternalError,
  NotUnipotent,
  WorkLimitExceeded,
  NotPrime,
  InsufficientPoints,
  DependentInput,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::OddB: return "OddB";
  case ErrorCode::CharPolyMismatch: return "CharPolyMismatch";
  case ErrorCode::RankError: return "RankError";
  case ErrorCode::InternalError: return "InternalError";
  case ErrorCode::NotUnipotent: return "NotUnipotent";
  case ErrorCode::WorkLimitExceeded: return "WorkLimitExceeded";
  case ErrorCode::NotPrime: return "NotPrime";
  case ErrorCode::InsufficientPoints: return "InsufficientPoints";
  case ErrorCode::DependentInput: return "DependentInput";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace splitcount
