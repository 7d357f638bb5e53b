#include <gtest/gtest.h>

#include <random>

#include "oracles/oracles.hpp"
#include "swt/series.hpp"

using swt::Rational;
using swt::TruncSeries;

namespace {

TruncSeries geometric_weights(std::size_t order) {
  TruncSeries s(order);
  for (std::size_t m = 0; m <= order; ++m) s[m] = Rational(static_cast<long long>(m + 1));
  return s;
}

TruncSeries random_series(std::mt19937_64& rng, std::size_t order, bool zero_constant) {
  TruncSeries s(order);
  for (std::size_t k = zero_constant ? 1 : 0; k <= order; ++k)
    s[k] = Rational(static_cast<long long>(rng() % 11) - 5, static_cast<long long>(rng() % 4) + 1);
  return s;
}

}  // namespace

TEST(Series, ConstructionPadsAndRejectsOverflow) {
  const TruncSeries s(3, {1, 2});
  EXPECT_EQ(s.order(), 3u);
  EXPECT_EQ(s[3], 0);
  EXPECT_THROW(TruncSeries(1, {1, 2, 3}), swt::OrderMismatch);
  EXPECT_EQ(TruncSeries::monomial(2, 5), TruncSeries(2));
}

TEST(Series, MulDifferenceOfSquares) {
  EXPECT_EQ(swt::series_mul(TruncSeries(2, {1, 1}), TruncSeries(2, {1, -1})), TruncSeries(2, {1, 0, -1}));
}

TEST(Series, MulIdentity) {
  const TruncSeries a(4, {3, Rational(1, 2), -7, 0, 2});
  EXPECT_EQ(swt::series_mul(a, TruncSeries::one(4)), a);
}

TEST(Series, MulHandProduct) {
  EXPECT_EQ(swt::series_mul(TruncSeries(3, {1, -3, 1}), geometric_weights(3)), TruncSeries(3, {1, -1, -2, -3}));
}

TEST(Series, MulOrderMismatch) {
  EXPECT_THROW(swt::series_mul(TruncSeries(2), TruncSeries(3)), swt::OrderMismatch);
  EXPECT_THROW(TruncSeries(2) + TruncSeries(3), swt::OrderMismatch);
}

TEST(Series, ExpBasics) {
  EXPECT_EQ(swt::series_exp(TruncSeries(4)), TruncSeries::one(4));
  EXPECT_EQ(swt::series_exp(TruncSeries(3, {0, 1})), TruncSeries(3, {1, 1, Rational(1, 2), Rational(1, 6)}));
  TruncSeries a(4);
  for (int k = 1; k <= 4; ++k) a[k] = Rational(2, k);
  EXPECT_EQ(swt::series_exp(a), TruncSeries(4, {1, 2, 3, 4, 5}));
}

TEST(Series, ExpRejectsConstantTerm) { EXPECT_THROW(swt::series_exp(TruncSeries(2, {1})), std::domain_error); }

TEST(Series, DivBasics) {
  EXPECT_EQ(swt::series_div(TruncSeries::one(3), TruncSeries(3, {1, -1})), TruncSeries(3, {1, 1, 1, 1}));
  const TruncSeries a(3, {2, 5, -1, 4});
  EXPECT_EQ(swt::series_div(a, a), TruncSeries::one(3));
  EXPECT_EQ(swt::series_div(TruncSeries(3, {1, -3, 1}), TruncSeries(3, {1, -2, 1})), TruncSeries(3, {1, -1, -2, -3}));
  EXPECT_THROW(swt::series_div(a, TruncSeries(3, {0, 1})), swt::DivisionByZero);
}

TEST(Series, RingAxiomsOnRandomSeries) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t order = rng() % 9;
    const auto a = random_series(rng, order, false), b = random_series(rng, order, false),
               c = random_series(rng, order, false);
    EXPECT_EQ(swt::series_mul(swt::series_mul(a, b), c), swt::series_mul(a, swt::series_mul(b, c)));
    EXPECT_EQ(swt::series_mul(a, b + c), swt::series_mul(a, b) + swt::series_mul(a, c));
    EXPECT_EQ(swt::series_mul(a, b), swt::series_mul(b, a));
  }
}

TEST(Series, DivInvertsMul) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t order = rng() % 9;
    const auto a = random_series(rng, order, false);
    auto b = random_series(rng, order, false);
    if (b[0] == 0) b[0] = 3;
    EXPECT_EQ(swt::series_div(swt::series_mul(a, b), b), a);
  }
}

TEST(Series, ExpIsAHomomorphism) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t order = rng() % 8;
    const auto a = random_series(rng, order, true), b = random_series(rng, order, true);
    EXPECT_EQ(swt::series_exp(a + b), swt::series_mul(swt::series_exp(a), swt::series_exp(b)));
  }
}

TEST(Series, ExpMatchesTaylorOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t order = rng() % 7;
    const auto a = random_series(rng, order, true);
    const oracle::Poly ref = oracle::taylor_exp(oracle::Poly(a.coeffs().begin(), a.coeffs().end()), order);
    EXPECT_EQ(swt::series_exp(a), TruncSeries(order, ref));
  }
}

TEST(Series, IntegerCoefficients) {
  EXPECT_TRUE(TruncSeries(2, {1, -4, 7}).is_integral());
  EXPECT_FALSE(TruncSeries(2, {1, Rational(1, 3)}).is_integral());
  EXPECT_THROW(TruncSeries(2, {1, Rational(1, 3)}).integer_coeffs(), swt::InvariantViolation);
  EXPECT_EQ(TruncSeries(5, {1, 2, 3}).truncated(1), TruncSeries(1, {1, 2}));
  EXPECT_THROW(TruncSeries(1).truncated(2), swt::OrderMismatch);
}
