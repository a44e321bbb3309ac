#include "christol/linear_algebra.hpp"

#include "christol/errors.hpp"

namespace christol {

std::vector<Residue> row_times(Prime p, std::span<const Residue> v, const Matrix& m) {
  if (v.size() != m.rows()) throw DimensionMismatch(m.rows(), v.size());
  std::vector<Residue> out(m.cols(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = p.add(out[j], p.mul(v[i], m(i, j)));
  }
  return out;
}

Residue dot(Prime p, std::span<const Residue> a, std::span<const Residue> b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  Residue s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = p.add(s, p.mul(a[i], b[i]));
  return s;
}

SpanTracker::Reduced SpanTracker::reduce(std::span<const Residue> v) const {
  if (v.size() != dim_) throw DimensionMismatch(dim_, v.size());
  Reduced r{std::vector<Residue>(v.begin(), v.end()), std::vector<Residue>(rank(), 0), std::nullopt};
  for (std::size_t k = 0; k < echelon_.size(); ++k) {
    const Residue c = r.residual[pivots_[k]];
    if (c == 0) continue;
    const auto& row = echelon_[k];
    for (std::size_t j = pivots_[k]; j < dim_; ++j) r.residual[j] = p_.sub(r.residual[j], p_.mul(c, row[j]));
    const auto& combo = combo_[k];
    for (std::size_t j = 0; j < combo.size(); ++j) r.coords[j] = p_.add(r.coords[j], p_.mul(c, combo[j]));
  }
  for (std::size_t j = 0; j < dim_; ++j) {
    if (r.residual[j] != 0) {
      r.pivot = j;
      break;
    }
  }
  return r;
}

std::optional<std::vector<Residue>> SpanTracker::coordinates(std::span<const Residue> v) const {
  auto r = reduce(v);
  if (r.pivot) return std::nullopt;
  return std::move(r.coords);
}

std::optional<std::vector<Residue>> SpanTracker::insert(std::span<const Residue> v) {
  auto r = reduce(v);
  if (!r.pivot) return std::move(r.coords);
  // residual = v - sum coords_j g_j, and v becomes generator number m.
  const std::size_t m = rank();
  const Residue scale = p_.inv(r.residual[*r.pivot]);
  for (auto& x : r.residual) x = p_.mul(x, scale);
  std::vector<Residue> combo(m + 1, 0);
  for (std::size_t j = 0; j < m; ++j) combo[j] = p_.mul(p_.neg(r.coords[j]), scale);
  combo[m] = scale;
  for (auto& c : combo_) c.resize(m + 1, 0);
  echelon_.push_back(std::move(r.residual));
  combo_.push_back(std::move(combo));
  pivots_.push_back(*r.pivot);
  return std::nullopt;
}

std::size_t rank_of(Prime p, const std::vector<std::vector<Residue>>& vectors) {
  if (vectors.empty()) return 0;
  SpanTracker t(p, vectors.front().size());
  for (const auto& v : vectors) t.insert(v);
  return t.rank();
}

}  // namespace christol
