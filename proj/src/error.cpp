#include "isoforge/error.hpp"

namespace isoforge {

const char *error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotEffective: return "NotEffective";
    case ErrorKind::OrderLimitExceeded: return "OrderLimitExceeded";
    case ErrorKind::InvalidBasePair: return "InvalidBasePair";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorKind::AsymmetricEntry: return "AsymmetricEntry";
    case ErrorKind::NegativeOrZeroOffDiagonal: return "NegativeOrZeroOffDiagonal";
    case ErrorKind::TriangleViolation: return "TriangleViolation";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::BudgetUnderflow: return "BudgetUnderflow";
    case ErrorKind::InfeasibleSeparation: return "InfeasibleSeparation";
    case ErrorKind::NotOutsideHull: return "NotOutsideHull";
    case ErrorKind::ForbiddenCardinality: return "ForbiddenCardinality";
    case ErrorKind::RouteMismatch: return "RouteMismatch";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::Usage: return "Usage";
  }
  return "Error";
}

}  // namespace isoforge
