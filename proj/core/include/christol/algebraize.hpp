#pragma once

#include <cstddef>

#include "christol/algebraic_series.hpp"
#include "christol/automaton.hpp"

namespace christol {

/// a_0..a_{N-1} read off the automaton.
TruncatedSeries automatic_to_series(const Dfao& a, std::size_t terms);

/// Searches for Q with deg_x <= dx, deg_y <= dy and Q(x, f) = 0 mod x^Nf.
///
/// Columns x^i f^j are scanned in (j, i) order; the first one that depends on
/// its predecessors yields the relation, so among all solutions the one with
/// the smallest leading monomial is returned. The result is scaled so that
/// its first nonzero coefficient in (j, i) order is 1.
///
/// This only certifies the relation up to the given precision; re-verify on a
/// longer prefix. Throws PreconditionViolation when
/// Nf < (dx+1)(dy+1) + dx + dy, NoRelationFound when no relation exists.
BivariatePolynomial guess_polynomial(const TruncatedSeries& f, unsigned dx, unsigned dy);

}  // namespace christol
