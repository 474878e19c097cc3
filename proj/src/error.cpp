#include "diho/error.hpp"

namespace diho {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::AssignmentIncomplete: return "ASSIGNMENT_INCOMPLETE";
    case ErrorCode::UnknownTarget: return "UNKNOWN_TARGET";
    case ErrorCode::UnknownLabel: return "UNKNOWN_LABEL";
    case ErrorCode::InvalidMap: return "INVALID_MAP";
    case ErrorCode::InvalidEdge: return "INVALID_EDGE";
    case ErrorCode::NotSubdigraph: return "NOT_SUBDIGRAPH";
    case ErrorCode::DomainMismatch: return "DOMAIN_MISMATCH";
    case ErrorCode::SignatureMismatch: return "SIGNATURE_MISMATCH";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::RestrictionMismatch: return "RESTRICTION_MISMATCH";
    case ErrorCode::PreconditionFailed: return "PRECONDITION_FAILED";
    case ErrorCode::NotSubcategory: return "NOT_SUBCATEGORY";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::IoError: return "IO_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace diho
