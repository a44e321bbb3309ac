#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "christol/algebraic_series.hpp"
#include "christol/linear_algebra.hpp"

namespace christol {

/// Section digits applied so far, least significant first.
using DigitPath = std::vector<unsigned>;

struct ClosureConfig {
  std::size_t n_eq = 64;          ///< comparison precision for kernel elements
  std::size_t max_states = 4096;  ///< basis / automaton size cap
  unsigned recheck_factor = 2;
  /// Hard ceiling on the precision the root series is expanded to. Deep
  /// kernels need about n_eq * p^depth coefficients.
  std::size_t max_precision = std::size_t{1} << 22;

  /// Throws PreconditionViolation when n_eq < 8 or recheck_factor < 2.
  void validate() const;
};

/// Expands the branch of a BranchSpec on demand, doubling the precision when
/// a deeper kernel element needs more coefficients.
class BranchExpansion {
 public:
  BranchExpansion(BranchSpec spec, std::size_t max_precision);

  const BranchSpec& spec() const noexcept { return spec_; }
  /// The root series to at least `precision` coefficients.
  const TruncatedSeries& series(std::size_t precision);
  /// The iterated section along `path`, truncated to `precision`.
  TruncatedSeries along(const DigitPath& path, std::size_t precision);

 private:
  BranchSpec spec_;
  std::size_t max_precision_;
  TruncatedSeries root_;
};

/// Linear representation of a kernel: basis z_1..z_m of the span of all
/// iterated sections of f, per-digit matrices, constant terms and the
/// coordinates of f itself.
struct KernelRepresentation {
  Prime p;
  std::size_t n_eq;
  std::vector<DigitPath> paths;         ///< how each basis series arises from f
  std::vector<TruncatedSeries> basis;   ///< basis series at precision n_eq
  /// transitions[d](i, j): coordinate j of section(z_i, d).
  std::vector<Matrix> transitions;
  std::vector<Residue> output;          ///< constant terms of z_i
  std::vector<Residue> initial;         ///< coordinates of f: e_1, or empty when f = 0 to n_eq

  std::size_t dimension() const noexcept { return basis.size(); }
  friend bool operator==(const KernelRepresentation&, const KernelRepresentation&) = default;
};

/// Breadth-first closure of f under sections, digits ascending, keeping the
/// first independent series at each step. Kernel elements are compared at
/// precision cfg.n_eq. Throws StateCapExceeded when the basis would exceed
/// cfg.max_states.
KernelRepresentation orbit_closure(const BranchSpec& spec, const ClosureConfig& cfg = {});

/// alpha * M[digit].
std::vector<Residue> alpha_step(const KernelRepresentation& rep, std::span<const Residue> alpha,
                                unsigned digit);
/// alpha . b0
FpElement alpha_output(const KernelRepresentation& rep, std::span<const Residue> alpha);

/// Re-derives every basis series at precision factor * n_eq and checks all
/// transition relations, the constant terms and the coordinates of f there.
/// factor < 2 is a PreconditionViolation.
bool recheck(const KernelRepresentation& rep, const BranchSpec& spec, unsigned factor,
             std::size_t max_precision = ClosureConfig{}.max_precision);

}  // namespace christol
