#pragma once

#include <stdexcept>
#include <string>

namespace isoforge {

enum class ErrorKind {
  // group construction
  NotLatinSquare,
  NoIdentity,
  NoInverse,
  NotAssociative,
  NotEffective,
  OrderLimitExceeded,
  // doubling
  InvalidBasePair,
  UnknownName,
  // metric validation
  NonzeroDiagonal,
  AsymmetricEntry,
  NegativeOrZeroOffDiagonal,
  TriangleViolation,
  // search / iteration
  SearchBudgetExceeded,
  BudgetUnderflow,
  InfeasibleSeparation,
  NotOutsideHull,
  ForbiddenCardinality,
  RouteMismatch,
  VerificationFailed,
  // plumbing
  ParseError,
  IoError,
  Precondition,
  Usage,
};

const char *error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace isoforge
