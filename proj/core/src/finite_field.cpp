#include "christol/finite_field.hpp"

#include <ostream>

#include "christol/errors.hpp"

namespace christol {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t value) {
  if (value > kMaxValue || !is_prime(value)) throw NotPrime(value);
  p_ = static_cast<std::uint32_t>(value);
}

Residue Prime::pow(Residue base, std::uint64_t exponent) const noexcept {
  Residue result = 1 % p_;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

Residue Prime::inv(Residue a) const {
  if (a % p_ == 0) throw DivisionByZero();
  return pow(a, p_ - 2);
}

namespace {
void check_same(Prime a, Prime b) {
  if (a != b) throw ModulusMismatch(a.value(), b.value());
}
}  // namespace

FpElement FpElement::inverse() const { return {p_.inv(value_), p_}; }

FpElement operator+(FpElement a, FpElement b) {
  check_same(a.p_, b.p_);
  return {a.p_.add(a.value_, b.value_), a.p_};
}

FpElement operator-(FpElement a, FpElement b) {
  check_same(a.p_, b.p_);
  return {a.p_.sub(a.value_, b.value_), a.p_};
}

FpElement operator*(FpElement a, FpElement b) {
  check_same(a.p_, b.p_);
  return {a.p_.mul(a.value_, b.value_), a.p_};
}

FpElement operator/(FpElement a, FpElement b) {
  check_same(a.p_, b.p_);
  return {a.p_.mul(a.value_, a.p_.inv(b.value_)), a.p_};
}

FpElement pth_root(FpElement a) { return a; }

std::ostream& operator<<(std::ostream& os, FpElement a) { return os << a.value(); }

}  // namespace christol
