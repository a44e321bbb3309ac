#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "christol/power_series.hpp"

namespace christol {

/// Q(x, y) = sum_{i,j} c_ij x^i y^j over F_p, stored dense with trailing zero
/// rows and columns trimmed. Always genuinely involves y (deg_y >= 1).
class BivariatePolynomial {
 public:
  /// by_y_power[j][i] is the coefficient of x^i y^j. Throws
  /// DegeneratePolynomial when no y^j with j >= 1 survives trimming.
  BivariatePolynomial(Prime p, std::vector<std::vector<Residue>> by_y_power);

  Prime prime() const noexcept { return p_; }
  unsigned deg_x() const noexcept { return dx_; }
  unsigned deg_y() const noexcept { return dy_; }
  Residue coeff(unsigned i, unsigned j) const;
  /// Coefficient of y^j as a polynomial in x, length deg_x() + 1.
  std::span<const Residue> y_coefficient(unsigned j) const;

  /// Q(x, f) truncated at the precision of f.
  TruncatedSeries evaluate(const TruncatedSeries& f) const;
  /// dQ/dy (x, f) truncated at the precision of f.
  TruncatedSeries evaluate_dy(const TruncatedSeries& f) const;

  /// Expanded form in the parse_bivariate grammar, e.g. "x + y + x^2*y".
  std::string to_string() const;

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

 private:
  Prime p_;
  unsigned dx_ = 0;
  unsigned dy_ = 0;
  std::vector<Residue> table_;  // (dy+1) rows of (dx+1) entries
};

struct ParseLimits {
  unsigned max_deg_x = 64;
  unsigned max_deg_y = 64;
};

/// Grammar (whitespace between tokens is ignored):
///
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := uint | 'x' | 'y' | '(' expr ')'
///
/// Throws SyntaxError (with the offending position), DegreeOverflow when an
/// intermediate result exceeds the limits, DegeneratePolynomial when the
/// result does not involve y.
BivariatePolynomial parse_bivariate(std::string_view text, Prime p, ParseLimits limits = {});

/// A polynomial plus a seed a_0..a_{s-1} that singles out one power-series
/// root of Q(x, y) = 0.
struct BranchSpec {
  BivariatePolynomial q;
  std::vector<Residue> seed;

  Prime prime() const noexcept { return q.prime(); }
};

enum class ExpansionMethod {
  kAuto,      ///< Newton when dQ/dy(0, a_0) != 0, otherwise candidate testing
  kBaseline,  ///< coefficient-by-coefficient candidate testing only
  kNewton,    ///< Newton lifting; PreconditionViolation if dQ/dy(0, a_0) == 0
};

/// The unique f extending the seed with Q(x, f) = 0 mod x^N.
///
/// Throws AmbiguousBranch(n) when several values fit a_n and the seed does
/// not fix it, NoBranch(n) when none does.
TruncatedSeries expand_branch(const BranchSpec& spec, std::size_t terms,
                              ExpansionMethod method = ExpansionMethod::kAuto);

/// numer / denom to precision N. Throws NonUnitDenominator when denom[0] == 0.
TruncatedSeries expand_rational(Prime p, std::span<const Residue> numer,
                                std::span<const Residue> denom, std::size_t terms);

/// True iff Q(x, f) = 0 mod x^Nf.
bool verify_annihilation(const BivariatePolynomial& q, const TruncatedSeries& f);

}  // namespace christol
