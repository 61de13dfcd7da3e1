#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jacder {

// Every failure the library or the CLI can report. The CLI maps each code to
// exactly one exit status (see exit_code()).
enum class ErrorCode {
  DivisionByZero,
  BothZero,
  Inconsistent,
  ConstantInput,
  ConstantP,
  InternalInconsistency,
  NotDivisible,
  NotMember,
  NotDivergenceFree,
  NotClosed,
  BoundTooSmall,
  NotInCentralizer,
  DivisibilityViolation,
  NotUnitEigenpair,
  ParseError,
  UsageError,
};

inline constexpr ErrorCode kAllErrorCodes[] = {
    ErrorCode::DivisionByZero,     ErrorCode::BothZero,
    ErrorCode::Inconsistent,       ErrorCode::ConstantInput,
    ErrorCode::ConstantP,          ErrorCode::InternalInconsistency,
    ErrorCode::NotDivisible,       ErrorCode::NotMember,
    ErrorCode::NotDivergenceFree,  ErrorCode::NotClosed,
    ErrorCode::BoundTooSmall,      ErrorCode::NotInCentralizer,
    ErrorCode::DivisibilityViolation, ErrorCode::NotUnitEigenpair,
    ErrorCode::ParseError,         ErrorCode::UsageError,
};

std::string_view error_name(ErrorCode code);

// 1 for domain errors, 2 for parse and usage errors.
int exit_code(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace jacder
