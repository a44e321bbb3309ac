// Acceptance suite: one line per criterion, non-zero exit if any fails.
// All checks are exact (field arithmetic); there are no tolerances.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <nlohmann/json.hpp>
#include <random>
#include <string>

#include "automaton_helpers.hpp"
#include "christol/christol.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace christol {
namespace {

using testing::random_element;
using testing::random_series;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(std::string why) {
    if (pass) detail = std::move(why);
    pass = false;
  }
};

Outcome weeding_identity() {
  Outcome o;
  std::mt19937_64 rng(1001);
  for (unsigned q : {2u, 3u, 5u, 7u}) {
    const Prime p(q);
    std::uniform_int_distribution<unsigned> degree(0, q - 1);
    for (int t = 0; t < 1000; ++t) {
      const auto f = random_series(rng, p, 0, 96);
      const unsigned k = degree(rng);
      if (weed_via_derivative(f, k) != section(f, q - 1 - k)) {
        o.fail("p=" + std::to_string(q) + " k=" + std::to_string(k) + " f=" + format_series(f));
      }
    }
  }
  o.detail = o.pass ? "4000 cases, p in {2,3,5,7}" : o.detail;
  return o;
}

Outcome reconstruction() {
  Outcome o;
  std::mt19937_64 rng(1002);
  for (unsigned q : {2u, 3u, 5u}) {
    const Prime p(q);
    for (int t = 0; t < 500; ++t) {
      const auto f = random_series(rng, p, 0, 96);
      auto sum = TruncatedSeries::zero(p, f.precision());
      for (unsigned r = 0; r < q; ++r) sum = add(shift(frobenius(section(f, r)), r), sum);
      if (sum != f) o.fail("p=" + std::to_string(q) + " f=" + format_series(f));
    }
  }
  o.detail = o.pass ? "1500 cases, p in {2,3,5}" : o.detail;
  return o;
}

Outcome digit_oracle_check(const std::string& name, std::size_t expected_states, std::uint64_t exhaustive_limit,
                           std::size_t random_digits, const std::function<unsigned(const std::vector<unsigned>&)>& oracle) {
  Outcome o;
  const auto spec = catalog_entry(name).spec();
  const Prime p = spec.prime();
  const auto a = minimize(build_dfao(spec));
  if (a.size() != expected_states) o.fail("minimized DFAO has " + std::to_string(a.size()) + " states");
  for (std::uint64_t n = 0; n < exhaustive_limit && o.pass; ++n) {
    const auto digits = testing::base_digits(n, p.value());
    if (query(a, std::to_string(n)).value() != oracle(digits)) o.fail("mismatch at n=" + std::to_string(n));
  }
  std::mt19937_64 rng(1003 + p.value());
  for (int t = 0; t < 20 && o.pass; ++t) {
    const auto n = testing::random_decimal(rng, random_digits);
    if (query(a, n).value() != oracle(testing::decimal_to_base(n, p.value()))) o.fail("mismatch at n=" + n);
  }
  if (o.pass) {
    o.detail = std::to_string(a.size()) + " states; n < " + std::to_string(exhaustive_limit) + " and 20 random " +
               std::to_string(random_digits) + "-digit n";
  }
  return o;
}

Outcome thue_morse_end_to_end() {
  return digit_oracle_check("thue-morse", 2, 1u << 14, 40, [](const std::vector<unsigned>& d) {
    unsigned ones = 0;
    for (auto x : d) ones += x;
    return ones % 2;
  });
}

Outcome central_binomial_end_to_end() {
  return digit_oracle_check("central-binomial-3", 3, 19683, 50, testing::central_binomial_mod3_digits);
}

Outcome kernel_equals_linear_machine() {
  Outcome o;
  std::size_t enumerated = 0;
  for (const auto& e : catalog()) {
    const auto spec = e.spec();
    const auto orbit = minimize(build_dfao(spec));
    const auto linear = minimize(dfao_from_linear(orbit_closure(spec)));
    if (orbit != linear) o.fail(e.name + ": minimized machines differ");
    if (!testing::equivalent(orbit, linear)) o.fail(e.name + ": outputs differ on some string");
    // Literal enumeration of all p^0 + ... + p^12 strings where that is cheap;
    // the product-automaton search above covers every length for all p.
    if (e.p <= 5) {
      if (!testing::agree_on_all_strings(orbit, linear, 12)) o.fail(e.name + ": differ on a string of length <= 12");
      ++enumerated;
    }
  }
  if (o.pass) {
    o.detail = std::to_string(catalog().size()) + " specs isomorphic; " + std::to_string(enumerated) +
               " enumerated to length 12, all checked by product search";
  }
  return o;
}

Outcome linearity() {
  Outcome o;
  std::mt19937_64 rng(1005);
  for (unsigned q : {2u, 3u, 5u}) {
    const Prime p(q);
    for (int t = 0; t < 1000; ++t) {
      const auto f = random_series(rng, p, 0, 96);
      const auto g = random_series(rng, p, 0, 96);
      const auto alpha = random_element(rng, p);
      for (unsigned k = 0; k < q; ++k) {
        if (weed(add(f, g, alpha), k) != add(weed(f, k), weed(g, k), alpha)) {
          o.fail("p=" + std::to_string(q) + " k=" + std::to_string(k));
        }
      }
    }
  }
  o.detail = o.pass ? "3000 triples, all k" : o.detail;
  return o;
}

Outcome closure_soundness() {
  Outcome o;
  std::size_t states = 0;
  for (const auto& e : catalog()) {
    const auto spec = e.spec();
    const auto rep = orbit_closure(spec);
    if (!recheck(rep, spec, 2)) o.fail(e.name + ": recheck at factor 2 failed");
    for (const auto& a : {build_dfao(spec), dfao_from_linear(rep)}) {
      for (const auto& m : {a, minimize(a)}) {
        for (const auto& s : m.states) {
          ++states;
          if (m.states[s.next[0]].output != s.output) o.fail(e.name + ": trailing zero changes output");
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(catalog().size()) + " specs rechecked; " + std::to_string(states) + " states stable";
  return o;
}

Outcome converse_round_trip() {
  Outcome o;
  const Prime two(2);
  auto prefix = [&](std::size_t n) {
    std::vector<Residue> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = testing::digit_parity(i);
    return TruncatedSeries(two, std::move(c));
  };
  try {
    const auto q = guess_polynomial(prefix(32), 3, 2);
    if (!verify_annihilation(q, prefix(64))) o.fail("Q = " + q.to_string() + " fails on 64 terms");
    o.detail = "Q = " + q.to_string();
  } catch (const Error& e) {
    o.fail(std::string("(3,2): ") + e.what());
  }
  try {
    guess_polynomial(prefix(32), 1, 1);
    o.fail("(1,1) unexpectedly found a relation");
  } catch (const NoRelationFound&) {
  }
  return o;
}

Outcome serialization() {
  Outcome o;
  std::size_t machines = 0;
  for (const auto& e : catalog()) {
    const auto spec = e.spec();
    for (const auto& a : {build_dfao(spec), minimize(build_dfao(spec)), dfao_from_linear(orbit_closure(spec))}) {
      ++machines;
      if (deserialize(serialize(a)) != a) o.fail(e.name + ": round trip changed the machine");
    }
  }
  const auto tm = nlohmann::json::parse(serialize(build_dfao(catalog_entry("thue-morse").spec())));
  if (tm["format"] != "dfao-v1" || tm["p"] != 2 || tm["states"].size() != 2) o.fail("Thue-Morse JSON shape");
  if (o.pass) o.detail = std::to_string(machines) + " machines round-tripped; Thue-Morse has 2 state entries";
  return o;
}

}  // namespace
}  // namespace christol

int main() {
  using namespace christol;
  struct Criterion {
    const char* name;
    Outcome (*check)();
  };
  const Criterion criteria[] = {
      {"1 weeding identity (derivative route = section)", weeding_identity},
      {"2 reconstruction from sections", reconstruction},
      {"3 Thue-Morse end to end", thue_morse_end_to_end},
      {"4 central binomial mod 3 end to end", central_binomial_end_to_end},
      {"5 orbit machine = linear-representation machine", kernel_equals_linear_machine},
      {"6 weeding linearity", linearity},
      {"7 closure soundness and trailing-zero stability", closure_soundness},
      {"8 converse round trip", converse_round_trip},
      {"9 dfao-v1 serialization", serialization},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %-50s %6.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
