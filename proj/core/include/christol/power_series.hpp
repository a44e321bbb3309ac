#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "christol/finite_field.hpp"

namespace christol {

/// The first N coefficients a_0..a_{N-1} of a formal power series over F_p.
/// N is the precision: nothing is known about a_N and beyond, and no
/// operation here ever invents such coefficients.
class TruncatedSeries {
 public:
  /// Residues are reduced mod p.
  TruncatedSeries(Prime p, std::vector<Residue> coeffs);
  TruncatedSeries(Prime p, std::initializer_list<Residue> coeffs)
      : TruncatedSeries(p, std::vector<Residue>(coeffs)) {}

  static TruncatedSeries zero(Prime p, std::size_t precision);
  static TruncatedSeries constant(Prime p, Residue c, std::size_t precision);

  Prime prime() const noexcept { return p_; }
  std::size_t precision() const noexcept { return coeffs_.size(); }
  std::span<const Residue> coeffs() const noexcept { return coeffs_; }
  Residue operator[](std::size_t j) const { return coeffs_[j]; }
  FpElement at(std::size_t j) const { return {coeffs_.at(j), p_}; }
  bool is_zero() const noexcept;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  Prime p_;
  std::vector<Residue> coeffs_;
};

/// scalar*f + g at precision min(Nf, Ng); scalar defaults to 1.
TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g,
                    std::optional<FpElement> scalar = std::nullopt);
TruncatedSeries scale(const TruncatedSeries& f, FpElement c);
TruncatedSeries negate(const TruncatedSeries& f);
/// Cauchy product at precision min(Nf, Ng).
TruncatedSeries multiply(const TruncatedSeries& f, const TruncatedSeries& g);
/// x^k * f, precision Nf + k.
TruncatedSeries shift(const TruncatedSeries& f, std::size_t k);
/// m-fold formal derivative, precision max(Nf - m, 0).
TruncatedSeries derivative(const TruncatedSeries& f, std::size_t times);
/// Termwise p-th root of a series supported on multiples of p; precision
/// ceil(Nf / p). Throws NotAPthPower otherwise.
TruncatedSeries pth_root(const TruncatedSeries& f);
/// f(x^p), precision p * Nf.
TruncatedSeries frobenius(const TruncatedSeries& f);
/// First min(n, Nf) coefficients.
TruncatedSeries truncate(const TruncatedSeries& f, std::size_t n);
/// 1/f to precision Nf; throws NonUnitDenominator when f[0] == 0.
TruncatedSeries reciprocal(const TruncatedSeries& f);

/// "0,1,1,0" -> series; whitespace around entries is ignored, values are
/// reduced mod p. An empty string parses to the empty series.
TruncatedSeries parse_series(std::string_view text, Prime p);
std::vector<Residue> parse_residues(std::string_view text, Prime p);
std::string format_series(const TruncatedSeries& f);

}  // namespace christol
