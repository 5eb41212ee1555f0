#include "mtz/errors.hpp"

namespace mtz {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonPrimitiveRay: return "NonPrimitiveRay";
    case ErrorKind::DuplicateRay: return "DuplicateRay";
    case ErrorKind::NonUnimodularCone: return "NonUnimodularCone";
    case ErrorKind::WallConditionViolation: return "WallConditionViolation";
    case ErrorKind::SupportViolation: return "SupportViolation";
    case ErrorKind::MixedPrecision: return "MixedPrecision";
    case ErrorKind::EmptyPrefix: return "EmptyPrefix";
    case ErrorKind::NotLineElementDecomposable: return "NotLineElementDecomposable";
    case ErrorKind::NonComplementaryBasis: return "NonComplementaryBasis";
    case ErrorKind::NonPositiveDirection: return "NonPositiveDirection";
    case ErrorKind::InexactSequence: return "InexactSequence";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NonIntegerQuotient: return "NonIntegerQuotient";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace mtz
