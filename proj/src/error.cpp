#include "circulant/error.hpp"

namespace circulant {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::InvalidJump: return "InvalidJump";
    case ErrorKind::EmptyConnectionSet: return "EmptyConnectionSet";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::InvalidThetaParams: return "InvalidThetaParams";
    case ErrorKind::InvalidFamilyParams: return "InvalidFamilyParams";
    case ErrorKind::DegenerateFamily: return "DegenerateFamily";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
    case ErrorKind::SubgroupViolation: return "SubgroupViolation";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

}  // namespace circulant
