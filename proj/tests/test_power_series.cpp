#include <gtest/gtest.h>

#include "christol/errors.hpp"
#include "christol/power_series.hpp"
#include "generators.hpp"

namespace christol {
namespace {

using testing::random_element;
using testing::random_series;

std::vector<Residue> coeffs(const TruncatedSeries& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

TEST(PowerSeries, AddMultiplyShiftExamples) {
  const Prime two(2);
  const TruncatedSeries one_plus_x(two, {1, 1});
  const TruncatedSeries x(two, {0, 1});
  EXPECT_EQ(coeffs(add(one_plus_x, x)), (std::vector<Residue>{1, 0}));

  const TruncatedSeries a(two, {1, 1, 0});
  EXPECT_EQ(coeffs(multiply(a, a)), (std::vector<Residue>{1, 0, 1}));

  const TruncatedSeries s(Prime(3), {1, 2});
  const auto shifted = shift(s, 2);
  EXPECT_EQ(coeffs(shifted), (std::vector<Residue>{0, 0, 1, 2}));
  EXPECT_EQ(shifted.precision(), 4u);
}

TEST(PowerSeries, AddWithScalarAndPrecision) {
  const Prime p(5);
  const TruncatedSeries f(p, {1, 2, 3, 4});
  const TruncatedSeries g(p, {1, 1, 1});
  EXPECT_EQ(coeffs(add(f, g, FpElement(2, p))), (std::vector<Residue>{3, 0, 2}));
}

TEST(PowerSeries, ModulusMismatch) {
  const TruncatedSeries f(Prime(2), {1});
  const TruncatedSeries g(Prime(3), {1});
  EXPECT_THROW(add(f, g), ModulusMismatch);
  EXPECT_THROW(multiply(f, g), ModulusMismatch);
}

TEST(PowerSeries, DerivativeExamples) {
  const Prime three(3);
  const TruncatedSeries f(three, {0, 1, 2, 0, 1, 1});
  EXPECT_EQ(coeffs(derivative(f, 1)), (std::vector<Residue>{1, 1, 0, 1, 2}));

  const TruncatedSeries ones(three, std::vector<Residue>(9, 1));
  EXPECT_EQ(coeffs(derivative(ones, 2)), (std::vector<Residue>{2, 0, 0, 2, 0, 0, 2}));
  EXPECT_EQ(derivative(f, 0), f);
  EXPECT_EQ(derivative(f, 10).precision(), 0u);
}

TEST(PowerSeries, PthRootExamples) {
  EXPECT_EQ(coeffs(pth_root(TruncatedSeries(Prime(2), {1, 0, 1, 0, 1}))), (std::vector<Residue>{1, 1, 1}));
  EXPECT_EQ(coeffs(pth_root(TruncatedSeries(Prime(3), {0, 0, 0, 2}))), (std::vector<Residue>{0, 2}));
  EXPECT_THROW(pth_root(TruncatedSeries(Prime(2), {1, 1})), NotAPthPower);
}

TEST(PowerSeries, ReciprocalAndParse) {
  const Prime p(2);
  const auto inv = reciprocal(TruncatedSeries(p, {1, 1, 0, 0, 0}));
  EXPECT_EQ(format_series(inv), "1,1,1,1,1");
  EXPECT_THROW(reciprocal(TruncatedSeries(p, {0, 1})), NonUnitDenominator);

  EXPECT_EQ(format_series(parse_series(" 0, 1 ,12", Prime(5))), "0,1,2");
  EXPECT_EQ(parse_series("", Prime(5)).precision(), 0u);
  EXPECT_THROW(parse_series("1,,2", Prime(5)), SyntaxError);
  EXPECT_THROW(parse_series("1,a", Prime(5)), SyntaxError);
}

TEST(PowerSeriesProperty, PthRootInvertsFrobenius) {
  std::mt19937_64 rng(11);
  for (unsigned q : {2u, 3u, 5u}) {
    const Prime p(q);
    for (int t = 0; t < 500; ++t) {
      // A valid input is g(x^p) cut at an arbitrary precision.
      const auto g = random_series(rng, p, 1, 40);
      std::uniform_int_distribution<std::size_t> cut(1, g.precision() * q);
      const auto f = truncate(frobenius(g), cut(rng));
      const auto root = pth_root(f);
      ASSERT_EQ(truncate(frobenius(root), f.precision()), f);
    }
  }
}

TEST(PowerSeriesProperty, PFoldDerivativeVanishes) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    for (unsigned q : {2u, 3u, 5u, 7u}) {
      const auto f = random_series(rng, Prime(q), 0, 60);
      ASSERT_TRUE(derivative(f, q).is_zero());
    }
  }
}

TEST(PowerSeriesProperty, MultiplicationCommutesAndAssociates) {
  std::mt19937_64 rng(13);
  for (unsigned q : {2u, 3u, 7u}) {
    const Prime p(q);
    for (int t = 0; t < 200; ++t) {
      const auto f = random_series(rng, p, 0, 30);
      const auto g = random_series(rng, p, 0, 30);
      const auto h = random_series(rng, p, 0, 30);
      ASSERT_EQ(multiply(f, g), multiply(g, f));
      ASSERT_EQ(multiply(multiply(f, g), h), multiply(f, multiply(g, h)));
      ASSERT_EQ(multiply(f, add(g, h, random_element(rng, p))).precision(),
                std::min({f.precision(), g.precision(), h.precision()}));
    }
  }
}

}  // namespace
}  // namespace christol
