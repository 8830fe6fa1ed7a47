#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace binomgroup {

enum class ErrorKind {
  NotPrime,
  TooLarge,
  NoIrreducibleFound,
  DivisionByZero,
  ExponentRange,
  ZeroCoefficient,
  BadFieldShape,
  BadCongruence,
  DegreeOverflow,
  BadGcd,
  BadDivisor,
  NotAPermutation,
  DegreeMismatch,
  MissingScalar,
  DegreeTooLarge,
  NotBlockRespecting,
  NotPrimePower,
  BoundTooLarge,
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every engine failure is reported through this type; callers switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace binomgroup
