#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace christol {

/// Base of every error raised by the library. Callers that only need a
/// diagnostic can catch this; the subclasses carry the failure mode.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPrime : public Error {
 public:
  explicit NotPrime(unsigned long long value);
};

class ModulusMismatch : public Error {
 public:
  ModulusMismatch(unsigned lhs, unsigned rhs);
};

class DivisionByZero : public Error {
 public:
  DivisionByZero();
};

class NotAPthPower : public Error {
 public:
  explicit NotAPthPower(std::size_t index);
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class DegreeOutOfRange : public Error {
 public:
  DegreeOutOfRange(unsigned degree, unsigned p);
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

/// Q does not involve y (or collapsed to zero), so it defines no algebraic
/// series.
class DegeneratePolynomial : public Error {
 public:
  using Error::Error;
};

class AmbiguousBranch : public Error {
 public:
  explicit AmbiguousBranch(std::size_t index);
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class NoBranch : public Error {
 public:
  explicit NoBranch(std::size_t index);
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class NonUnitDenominator : public Error {
 public:
  NonUnitDenominator();
};

class StateCapExceeded : public Error {
 public:
  explicit StateCapExceeded(std::size_t cap);
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class PrecisionLimitExceeded : public Error {
 public:
  PrecisionLimitExceeded(std::size_t needed, std::size_t limit);
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got);
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class MalformedNumber : public Error {
 public:
  explicit MalformedNumber(const std::string& text);
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class NoRelationFound : public Error {
 public:
  NoRelationFound(unsigned dx, unsigned dy);
};

/// Raised when an internal invariant fails; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace christol
