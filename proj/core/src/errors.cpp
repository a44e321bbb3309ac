#include "christol/errors.hpp"

namespace christol {

NotPrime::NotPrime(unsigned long long value)
    : Error("modulus " + std::to_string(value) + " is not a prime in [2, 65536]") {}

ModulusMismatch::ModulusMismatch(unsigned lhs, unsigned rhs)
    : Error("modulus mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}

DivisionByZero::DivisionByZero() : Error("division by zero") {}

NotAPthPower::NotAPthPower(std::size_t index)
    : Error("series is not a p-th power: nonzero coefficient at index " + std::to_string(index)),
      index_(index) {}

DegreeOutOfRange::DegreeOutOfRange(unsigned degree, unsigned p)
    : Error("weeding degree " + std::to_string(degree) + " must be below p = " + std::to_string(p)) {}

SyntaxError::SyntaxError(std::size_t position, const std::string& what)
    : Error("syntax error at position " + std::to_string(position) + ": " + what),
      position_(position) {}

AmbiguousBranch::AmbiguousBranch(std::size_t index)
    : Error("ambiguous branch: several values fit coefficient " + std::to_string(index) +
            " (extend the seed)"),
      index_(index) {}

NoBranch::NoBranch(std::size_t index)
    : Error("no power-series branch: no value fits coefficient " + std::to_string(index)),
      index_(index) {}

NonUnitDenominator::NonUnitDenominator()
    : Error("denominator has zero constant term") {}

StateCapExceeded::StateCapExceeded(std::size_t cap)
    : Error("state cap exceeded (" + std::to_string(cap) + " states)"), cap_(cap) {}

PrecisionLimitExceeded::PrecisionLimitExceeded(std::size_t needed, std::size_t limit)
    : Error("expansion precision " + std::to_string(needed) + " exceeds limit " +
            std::to_string(limit)) {}

DimensionMismatch::DimensionMismatch(std::size_t expected, std::size_t got)
    : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
            std::to_string(got)) {}

MalformedNumber::MalformedNumber(const std::string& text)
    : Error("malformed decimal number '" + text + "'") {}

NoRelationFound::NoRelationFound(unsigned dx, unsigned dy)
    : Error("no annihilating polynomial with deg_x <= " + std::to_string(dx) +
            " and deg_y <= " + std::to_string(dy)) {}

}  // namespace christol
