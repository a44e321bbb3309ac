#pragma once

#include <span>
#include <vector>

#include "christol/finite_field.hpp"

namespace christol::detail {

/// Full product a * b mod p (length |a| + |b| - 1). Schoolbook for short
/// inputs, otherwise number-theoretic transforms over two word-size primes
/// recombined by CRT; exact while |a|, |b| <= 2^22.
std::vector<Residue> convolve(Prime p, std::span<const Residue> a, std::span<const Residue> b);

}  // namespace christol::detail
