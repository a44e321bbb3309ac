#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>

namespace christol {

/// A coefficient stored as its canonical residue in [0, p).
using Residue = std::uint32_t;

/// A prime modulus p with 2 <= p <= 2^16, checked by trial division on
/// construction. Raw residue arithmetic lives here so that hot loops over
/// series coefficients do not have to carry a modulus per element.
class Prime {
 public:
  static constexpr std::uint32_t kMaxValue = 1u << 16;

  /// Throws NotPrime for composite or out-of-range values.
  explicit Prime(std::uint64_t value);

  std::uint32_t value() const noexcept { return p_; }

  Residue reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue pow(Residue base, std::uint64_t exponent) const noexcept;
  /// a^(p-2); throws DivisionByZero for a == 0.
  Residue inv(Residue a) const;

  friend bool operator==(Prime, Prime) = default;
  friend auto operator<=>(Prime, Prime) = default;

 private:
  std::uint32_t p_;
};

/// Element of F_p. Immutable; mixing moduli throws ModulusMismatch.
class FpElement {
 public:
  FpElement(std::int64_t value, Prime p) : p_(p), value_(p.reduce(value)) {}

  Residue value() const noexcept { return value_; }
  Prime prime() const noexcept { return p_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FpElement operator-() const { return {p_.neg(value_), p_}; }
  FpElement inverse() const;
  FpElement pow(std::uint64_t exponent) const { return {p_.pow(value_, exponent), p_}; }

  friend FpElement operator+(FpElement a, FpElement b);
  friend FpElement operator-(FpElement a, FpElement b);
  friend FpElement operator*(FpElement a, FpElement b);
  friend FpElement operator/(FpElement a, FpElement b);

  friend bool operator==(FpElement a, FpElement b) noexcept {
    return a.p_ == b.p_ && a.value_ == b.value_;
  }

 private:
  Prime p_;
  Residue value_;
};

/// The b with b^p = a. Over F_p the Frobenius map is the identity, so b = a.
FpElement pth_root(FpElement a);

bool is_prime(std::uint64_t n) noexcept;

std::ostream& operator<<(std::ostream& os, FpElement a);

}  // namespace christol
