#include "christol/catalog.hpp"

#include <stdexcept>

namespace christol {

BranchSpec CatalogEntry::spec() const {
  const Prime prime(p);
  return {parse_bivariate(polynomial, prime), seed};
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"thue-morse", 2, "(1+x)^3*y^2 + (1+x)^2*y + x", {0},
       "binary digit-sum parity"},
      {"rudin-shapiro", 2, "(1+x)^5*y^2 + (1+x)^4*y + x^3", {0},
       "parity of the number of 11 blocks in binary"},
      {"baum-sweet", 2, "y^3 + x*y + 1", {},
       "1 iff binary n has no block of zeros of odd length"},
      {"all-ones", 2, "(1+x)*y + 1", {},
       "1/(1+x) over F_2"},
      {"central-binomial-3", 3, "(1+2*x)*y^2 + 2", {1},
       "C(2n, n) mod 3, i.e. (1-4x)^(-1/2)"},
      {"central-binomial-5", 5, "(1+x)*y^2 + 4", {1},
       "C(2n, n) mod 5"},
      {"central-binomial-7", 7, "(1+3*x)*y^2 + 6", {1},
       "C(2n, n) mod 7"},
      {"fibonacci-3", 3, "(1+2*x+2*x^2)*y + 2", {},
       "Fibonacci numbers F_{n+1} mod 3, 1/(1-x-x^2)"},
  };
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("unknown catalog entry '" + std::string(name) + "'");
}

}  // namespace christol
