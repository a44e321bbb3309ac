#include "christol/kernel.hpp"

#include <algorithm>

#include "christol/errors.hpp"

namespace christol {

void ClosureConfig::validate() const {
  if (n_eq < 8) throw PreconditionViolation("comparison precision n_eq must be at least 8");
  if (recheck_factor < 2) throw PreconditionViolation("recheck factor must be at least 2");
  if (max_states == 0) throw PreconditionViolation("max_states must be positive");
}

BranchExpansion::BranchExpansion(BranchSpec spec, std::size_t max_precision)
    : spec_(std::move(spec)),
      max_precision_(max_precision),
      root_(TruncatedSeries::zero(spec_.prime(), 0)) {}

const TruncatedSeries& BranchExpansion::series(std::size_t precision) {
  if (root_.precision() >= precision) return root_;
  if (precision > max_precision_) throw PrecisionLimitExceeded(precision, max_precision_);
  std::size_t target = std::max<std::size_t>(root_.precision(), 16);
  while (target < precision) target *= 2;
  target = std::min(target, max_precision_);
  root_ = expand_branch(spec_, target);
  return root_;
}

TruncatedSeries BranchExpansion::along(const DigitPath& path, std::size_t precision) {
  const std::size_t p = spec_.prime().value();
  // Coefficient m of the result is f[offset + stride * m].
  std::size_t offset = 0;
  std::size_t stride = 1;
  for (unsigned d : path) {
    if (stride > max_precision_) throw PrecisionLimitExceeded(stride, max_precision_);
    offset += d * stride;
    stride *= p;
  }
  if (precision == 0) return TruncatedSeries::zero(spec_.prime(), 0);
  const std::size_t needed = offset + stride * (precision - 1) + 1;
  if (stride > max_precision_ || needed > max_precision_) {
    throw PrecisionLimitExceeded(std::max(needed, stride), max_precision_);
  }
  const auto& f = series(needed);
  std::vector<Residue> out(precision);
  for (std::size_t m = 0; m < precision; ++m) out[m] = f[offset + stride * m];
  return {spec_.prime(), std::move(out)};
}

KernelRepresentation orbit_closure(const BranchSpec& spec, const ClosureConfig& cfg) {
  cfg.validate();
  const Prime p = spec.prime();
  const unsigned digits = p.value();
  BranchExpansion source(spec, cfg.max_precision);

  KernelRepresentation rep{p, cfg.n_eq, {}, {}, {}, {}, {}};
  SpanTracker tracker(p, cfg.n_eq);
  // coords[d][i] = coordinates of section(z_i, d), sized to the rank at the time
  std::vector<std::vector<std::vector<Residue>>> coords(digits);

  // A root that vanishes to precision n_eq spans {0}: dimension 0, empty
  // initial vector, every query answers 0.
  auto root = source.along({}, cfg.n_eq);
  if (!tracker.insert(root.coeffs())) {
    rep.paths.push_back({});
    rep.basis.push_back(std::move(root));
  }

  for (std::size_t i = 0; i < rep.basis.size(); ++i) {
    for (unsigned d = 0; d < digits; ++d) {
      DigitPath path = rep.paths[i];
      path.push_back(d);
      auto s = source.along(path, cfg.n_eq);
      auto c = tracker.insert(s.coeffs());
      if (!c) {
        if (rep.basis.size() >= cfg.max_states) throw StateCapExceeded(cfg.max_states);
        c = std::vector<Residue>(rep.basis.size() + 1, 0);
        c->back() = 1;
        rep.paths.push_back(std::move(path));
        rep.basis.push_back(std::move(s));
      }
      coords[d].push_back(std::move(*c));
    }
  }

  const std::size_t m = rep.basis.size();
  rep.transitions.assign(digits, Matrix(m, m));
  for (unsigned d = 0; d < digits; ++d) {
    for (std::size_t i = 0; i < m; ++i) {
      const auto& row = coords[d][i];
      for (std::size_t j = 0; j < row.size(); ++j) rep.transitions[d](i, j) = row[j];
    }
  }
  rep.output.resize(m);
  for (std::size_t i = 0; i < m; ++i) rep.output[i] = rep.basis[i][0];
  rep.initial.assign(m, 0);
  if (m > 0) rep.initial[0] = 1;
  return rep;
}

std::vector<Residue> alpha_step(const KernelRepresentation& rep, std::span<const Residue> alpha,
                                unsigned digit) {
  if (digit >= rep.p.value()) throw DegreeOutOfRange(digit, rep.p.value());
  return row_times(rep.p, alpha, rep.transitions[digit]);
}

FpElement alpha_output(const KernelRepresentation& rep, std::span<const Residue> alpha) {
  return {dot(rep.p, alpha, rep.output), rep.p};
}

bool recheck(const KernelRepresentation& rep, const BranchSpec& spec, unsigned factor,
             std::size_t max_precision) {
  if (factor < 2) throw PreconditionViolation("recheck factor must be at least 2");
  if (rep.p != spec.prime()) throw ModulusMismatch(rep.p.value(), spec.prime().value());
  const Prime p = rep.p;
  const std::size_t m = rep.dimension();
  if (rep.paths.size() != m || rep.output.size() != m || rep.initial.size() != m ||
      rep.transitions.size() != p.value()) {
    return false;
  }
  const std::size_t n = factor * rep.n_eq;
  BranchExpansion source(spec, max_precision);

  std::vector<TruncatedSeries> z;
  z.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    z.push_back(source.along(rep.paths[i], n));
    if (truncate(z.back(), rep.n_eq) != rep.basis[i]) return false;
    if (z.back()[0] != rep.output[i]) return false;
  }

  auto combination = [&](std::span<const Residue> c) {
    auto acc = TruncatedSeries::zero(p, n);
    for (std::size_t j = 0; j < m; ++j) {
      if (c[j] != 0) acc = add(z[j], acc, FpElement(c[j], p));
    }
    return acc;
  };

  for (unsigned d = 0; d < p.value(); ++d) {
    const Matrix& t = rep.transitions[d];
    if (t.rows() != m || t.cols() != m) return false;
    for (std::size_t i = 0; i < m; ++i) {
      DigitPath path = rep.paths[i];
      path.push_back(d);
      if (source.along(path, n) != combination(t.row(i))) return false;
    }
  }
  return source.along({}, n) == combination(rep.initial);
}

}  // namespace christol
