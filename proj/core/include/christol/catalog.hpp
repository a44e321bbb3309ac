#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "christol/algebraic_series.hpp"

namespace christol {

/// A named algebraic series shipped with the library.
struct CatalogEntry {
  std::string name;
  unsigned p;
  std::string polynomial;  ///< parse_bivariate grammar
  std::vector<Residue> seed;
  std::string description;

  BranchSpec spec() const;
};

const std::vector<CatalogEntry>& catalog();
/// Throws std::out_of_range for unknown names.
const CatalogEntry& catalog_entry(std::string_view name);

}  // namespace christol
