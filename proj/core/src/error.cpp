#include <jacder/error.hpp>

namespace jacder {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::ConstantInput: return "ConstantInput";
    case ErrorCode::ConstantP: return "ConstantP";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::NotDivergenceFree: return "NotDivergenceFree";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::NotInCentralizer: return "NotInCentralizer";
    case ErrorCode::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorCode::NotUnitEigenpair: return "NotUnitEigenpair";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::UsageError:
      return 2;
    default:
      return 1;
  }
}

}  // namespace jacder
