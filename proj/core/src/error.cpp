#include "polycollatz/error.hpp"

namespace polycollatz {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::OddInput: return "OddInput";
    case ErrorCode::EvenInput: return "EvenInput";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateTerm: return "DuplicateTerm";
    case ErrorCode::InsufficientTerms: return "InsufficientTerms";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::DomainTooSmall: return "DomainTooSmall";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InternalMismatch: return "InternalMismatch";
  }
  return "Unknown";
}

}  // namespace polycollatz
