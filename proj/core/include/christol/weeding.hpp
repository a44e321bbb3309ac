#pragma once

#include "christol/power_series.hpp"

namespace christol {

/// Residue r in [0, p) picking the subsequence a_{pm+r}.
class SectionIndex {
 public:
  /// Throws DegreeOutOfRange when r >= p.
  SectionIndex(unsigned r, Prime p);
  unsigned value() const noexcept { return r_; }
  friend bool operator==(SectionIndex, SectionIndex) = default;

 private:
  unsigned r_;
};

/// Section (Cartier) operator: sum a_j x^j  ->  sum a_{pm+r} x^m.
/// Precision is 0 if Nf <= r, else floor((Nf - 1 - r) / p) + 1.
TruncatedSeries section(const TruncatedSeries& f, SectionIndex r);
TruncatedSeries section(const TruncatedSeries& f, unsigned r);

/// Weeding of degree k computed literally: multiply by x^k, take the
/// (p-1)-th derivative, negate, take the termwise p-th root. Since
/// (p-1)! = -1 in F_p this equals section(f, p-1-k). Kept as an independent
/// route for differential testing; use weed() otherwise.
TruncatedSeries weed_via_derivative(const TruncatedSeries& f, unsigned k);

/// Weeding of degree k, 0 <= k < p, by index extraction.
TruncatedSeries weed(const TruncatedSeries& f, unsigned k);

}  // namespace christol
