#pragma once

#include <random>

#include "christol/power_series.hpp"

namespace christol::testing {

inline TruncatedSeries random_series(std::mt19937_64& rng, Prime p, std::size_t n) {
  std::uniform_int_distribution<Residue> coeff(0, p.value() - 1);
  std::vector<Residue> c(n);
  for (auto& v : c) v = coeff(rng);
  return {p, std::move(c)};
}

inline TruncatedSeries random_series(std::mt19937_64& rng, Prime p, std::size_t min_n, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> len(min_n, max_n);
  return random_series(rng, p, len(rng));
}

inline FpElement random_element(std::mt19937_64& rng, Prime p) {
  std::uniform_int_distribution<Residue> coeff(0, p.value() - 1);
  return {coeff(rng), p};
}

}  // namespace christol::testing
