#include "christol/weeding.hpp"

#include "christol/errors.hpp"

namespace christol {

SectionIndex::SectionIndex(unsigned r, Prime p) : r_(r) {
  if (r >= p.value()) throw DegreeOutOfRange(r, p.value());
}

TruncatedSeries section(const TruncatedSeries& f, SectionIndex r) {
  const std::size_t p = f.prime().value();
  const std::size_t n = f.precision();
  const std::size_t offset = r.value();
  const std::size_t out_n = n <= offset ? 0 : (n - 1 - offset) / p + 1;
  std::vector<Residue> out(out_n);
  for (std::size_t m = 0; m < out_n; ++m) out[m] = f[p * m + offset];
  return {f.prime(), std::move(out)};
}

TruncatedSeries section(const TruncatedSeries& f, unsigned r) {
  return section(f, SectionIndex(r, f.prime()));
}

TruncatedSeries weed_via_derivative(const TruncatedSeries& f, unsigned k) {
  const Prime p = f.prime();
  if (k >= p.value()) throw DegreeOutOfRange(k, p.value());
  const auto differentiated = negate(derivative(shift(f, k), p.value() - 1));
  try {
    return pth_root(differentiated);
  } catch (const NotAPthPower& e) {
    throw InternalError(std::string("weeding produced a non-p-th power: ") + e.what());
  }
}

TruncatedSeries weed(const TruncatedSeries& f, unsigned k) {
  const Prime p = f.prime();
  if (k >= p.value()) throw DegreeOutOfRange(k, p.value());
  return section(f, SectionIndex(p.value() - 1 - k, p));
}

}  // namespace christol
