#include "christol/algebraize.hpp"

#include "christol/errors.hpp"
#include "christol/linear_algebra.hpp"

namespace christol {

TruncatedSeries automatic_to_series(const Dfao& a, std::size_t terms) {
  validate(a);
  std::vector<Residue> out(terms);
  for (std::size_t n = 0; n < terms; ++n) out[n] = run(a, to_digits_lsd(std::uint64_t{n}, a.p)).value();
  return {a.p, std::move(out)};
}

BivariatePolynomial guess_polynomial(const TruncatedSeries& f, unsigned dx, unsigned dy) {
  const Prime p = f.prime();
  const std::size_t n = f.precision();
  const std::size_t unknowns = std::size_t{dx + 1} * (dy + 1);
  if (dy == 0) throw PreconditionViolation("dy must be at least 1");
  if (n < unknowns + dx + dy) {
    throw PreconditionViolation("need at least " + std::to_string(unknowns + dx + dy) +
                                " terms for degrees (" + std::to_string(dx) + ", " +
                                std::to_string(dy) + "), got " + std::to_string(n));
  }

  SpanTracker tracker(p, n);
  std::vector<std::pair<unsigned, unsigned>> accepted;  // (i, j) of each generator
  auto power = TruncatedSeries::constant(p, 1, n);
  for (unsigned j = 0; j <= dy; ++j, power = multiply(power, f)) {
    for (unsigned i = 0; i <= dx; ++i) {
      const auto column = shift(power, i);
      const auto coords = tracker.insert(column.coeffs().first(n));
      if (!coords) {
        accepted.emplace_back(i, j);
        continue;
      }
      // x^i f^j - sum coords_k * generator_k = 0
      std::vector<std::vector<Residue>> rows(j + 1, std::vector<Residue>(dx + 1, 0));
      rows[j][i] = 1;
      for (std::size_t k = 0; k < accepted.size(); ++k) {
        const auto [ik, jk] = accepted[k];
        rows[jk][ik] = p.neg((*coords)[k]);
      }
      Residue lead = 0;
      for (unsigned jj = 0; jj <= j && lead == 0; ++jj)
        for (unsigned ii = 0; ii <= dx && lead == 0; ++ii) lead = rows[jj][ii];
      const Residue norm = p.inv(lead);
      for (auto& row : rows)
        for (auto& c : row) c = p.mul(c, norm);
      BivariatePolynomial q(p, std::move(rows));
      if (!verify_annihilation(q, f)) throw InternalError("guessed polynomial does not annihilate the series");
      return q;
    }
  }
  throw NoRelationFound(dx, dy);
}

}  // namespace christol
