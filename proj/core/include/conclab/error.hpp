#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conclab {

/// Failure categories raised by the library. Every precondition violation
/// maps to exactly one code so callers (and the CLI) can react without
/// parsing messages.
enum class ErrorCode {
  EmptyInput,
  ZeroPolynomial,
  NotPrimePower,
  NotPrime,
  NotCoprime,
  NotNormalized,
  InvalidArgument,
  EvaluationAtJumpPoint,
  DegenerateForm,
  SizeBoundExceeded,
  FactoringScope,
  NotLSpaceKnotPolynomial,
  InvalidVSequence,
  SurgeryCoefficientTooSmall,
  UnsupportedDegree,
  CoprimalityViolation,
  NotInPrimeSet,
  Schema,
  Parse,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace conclab
