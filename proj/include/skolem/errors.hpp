#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skolem {

enum class ErrorCode {
  ZeroTrailingCoefficient,
  AllInitialTermsZero,
  LengthMismatch,
  ParseError,
  DegenerateShape,
  CaseDegreeMismatch,
  PrecisionExhausted,
  ZeroRoot,
  OrderTooSmall,
  OrderMismatch,
  NotSimple,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroTrailingCoefficient: return "ZeroTrailingCoefficient";
    case ErrorCode::AllInitialTermsZero: return "AllInitialTermsZero";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DegenerateShape: return "DegenerateShape";
    case ErrorCode::CaseDegreeMismatch: return "CaseDegreeMismatch";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::ZeroRoot: return "ZeroRoot";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace skolem
