#include <gtest/gtest.h>

#include "christol/errors.hpp"
#include "christol/weeding.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace christol {
namespace {

using testing::random_element;
using testing::random_series;

TruncatedSeries thue_morse_prefix(std::size_t n) {
  std::vector<Residue> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = testing::digit_parity(i);
  return {Prime(2), std::move(c)};
}

const TruncatedSeries kPeriodic(Prime(3), {0, 1, 2, 0, 1, 2, 0, 1, 2});

TEST(Section, Examples) {
  EXPECT_EQ(format_series(section(kPeriodic, 1u)), "1,1,1");
  EXPECT_EQ(format_series(section(kPeriodic, 0u)), "0,0,0");
  // t_{2n+1} = 1 + t_n
  const auto tm = thue_morse_prefix(8);
  const auto odd = section(tm, 1u);
  ASSERT_EQ(odd.precision(), 4u);
  for (std::size_t n = 0; n < 4; ++n) EXPECT_EQ(odd[n], 1 - testing::digit_parity(n));
  EXPECT_EQ(format_series(odd), "1,0,0,1");
}

TEST(Section, PrecisionRule) {
  const Prime p(3);
  EXPECT_EQ(section(TruncatedSeries::zero(p, 2), 2u).precision(), 0u);
  EXPECT_EQ(section(TruncatedSeries::zero(p, 3), 2u).precision(), 1u);
  EXPECT_EQ(section(TruncatedSeries::zero(p, 7), 0u).precision(), 3u);
  EXPECT_EQ(section(TruncatedSeries::zero(p, 7), 1u).precision(), 2u);
  EXPECT_THROW(section(kPeriodic, 3u), DegreeOutOfRange);
}

TEST(Weeding, DerivativeRouteExamples) {
  EXPECT_EQ(weed_via_derivative(kPeriodic, 1), section(kPeriodic, 1u));
  EXPECT_EQ(format_series(weed_via_derivative(kPeriodic, 1)), "1,1,1");
  EXPECT_EQ(format_series(weed_via_derivative(kPeriodic, 0)), "2,2,2");
  EXPECT_EQ(weed_via_derivative(kPeriodic, 0), section(kPeriodic, 2u));
  const auto tm = thue_morse_prefix(8);
  EXPECT_EQ(format_series(weed_via_derivative(tm, 0)), "1,0,0,1");
}

TEST(Weeding, FastPathExamples) {
  EXPECT_EQ(format_series(weed(kPeriodic, 2)), "0,0,0");
  const auto ones = TruncatedSeries(Prime(2), std::vector<Residue>(8, 1));
  EXPECT_EQ(weed(ones, 1), TruncatedSeries(Prime(2), std::vector<Residue>(4, 1)));
  EXPECT_THROW(weed(TruncatedSeries::zero(Prime(5), 10), 5), DegreeOutOfRange);
  EXPECT_THROW(weed_via_derivative(TruncatedSeries::zero(Prime(5), 10), 5), DegreeOutOfRange);
}

TEST(WeedingProperty, RoutesAgree) {
  std::mt19937_64 rng(21);
  for (unsigned q : {2u, 3u, 5u, 7u}) {
    const Prime p(q);
    std::uniform_int_distribution<unsigned> degree(0, q - 1);
    for (int t = 0; t < 1000; ++t) {
      const auto f = random_series(rng, p, 0, 64);
      const unsigned k = degree(rng);
      ASSERT_EQ(weed(f, k), weed_via_derivative(f, k)) << "p=" << q << " k=" << k;
    }
  }
}

TEST(WeedingProperty, Linearity) {
  std::mt19937_64 rng(22);
  for (unsigned q : {2u, 3u, 5u}) {
    const Prime p(q);
    for (int t = 0; t < 300; ++t) {
      const auto f = random_series(rng, p, 0, 48);
      const auto g = random_series(rng, p, 0, 48);
      const auto alpha = random_element(rng, p);
      for (unsigned k = 0; k < q; ++k) {
        ASSERT_EQ(weed(add(f, g, alpha), k), add(weed(f, k), weed(g, k), alpha));
      }
    }
  }
}

TEST(WeedingProperty, SectionsReconstructTheSeries) {
  std::mt19937_64 rng(23);
  for (unsigned q : {2u, 3u, 5u}) {
    const Prime p(q);
    for (int t = 0; t < 300; ++t) {
      const auto f = random_series(rng, p, 0, 50);
      auto sum = TruncatedSeries::zero(p, f.precision());
      for (unsigned r = 0; r < q; ++r) sum = add(shift(frobenius(section(f, r)), r), sum);
      ASSERT_EQ(sum, f);
    }
  }
}

TEST(WeedingProperty, FrobeniusSemilinearity) {
  std::mt19937_64 rng(24);
  for (unsigned q : {2u, 3u, 5u}) {
    const Prime p(q);
    for (int t = 0; t < 300; ++t) {
      const auto g = random_series(rng, p, 1, 30);
      const auto h = random_series(rng, p, 1, 60);
      for (unsigned r = 0; r < q; ++r) {
        const auto lhs = section(multiply(frobenius(g), h), r);
        const auto rhs = multiply(g, section(h, r));
        const std::size_t n = std::min(lhs.precision(), rhs.precision());
        ASSERT_EQ(truncate(lhs, n), truncate(rhs, n));
      }
    }
  }
}

}  // namespace
}  // namespace christol
