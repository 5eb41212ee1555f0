#pragma once

#include <stdexcept>
#include <string>

namespace mtz {

enum class ErrorKind {
  InvalidArgument,
  ParseError,
  NonPrimitiveRay,
  DuplicateRay,
  NonUnimodularCone,
  WallConditionViolation,
  SupportViolation,
  MixedPrecision,
  EmptyPrefix,
  NotLineElementDecomposable,
  NonComplementaryBasis,
  NonPositiveDirection,
  InexactSequence,
  HypothesisViolation,
  BudgetExceeded,
  NonIntegerQuotient,
  InvariantViolation,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), message_(what) {}
  ErrorKind kind() const noexcept { return kind_; }
  // what() without the kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

// An identity that must hold failed; always a bug in this library.
#define MTZ_ASSERT(cond, msg)                                             \
  do {                                                                    \
    if (!(cond)) throw ::mtz::Error(::mtz::ErrorKind::InvariantViolation, \
                                    std::string(msg));                    \
  } while (0)

}  // namespace mtz
