#include <cmath>
#include <limits>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "raca/special_functions.hpp"

using namespace raca;

namespace {

constexpr double pi = std::numbers::pi;

}  // namespace

TEST(Lobachevsky, KnownValues) {
  // 30-digit mpmath values of Cl2(2θ)/2.
  EXPECT_NEAR(lobachevsky(pi / 4).value, 0.45798279708860965, 1e-14);
  EXPECT_NEAR(lobachevsky(pi / 3).value, 0.33831386880321798, 1e-14);
  EXPECT_NEAR(lobachevsky(pi / 6).value, 0.50747080320482681, 1e-14);
  EXPECT_NEAR(lobachevsky(pi / 8).value, 0.49093607552510168, 1e-14);
}

TEST(Lobachevsky, SixDecimalValues) {
  EXPECT_NEAR(lobachevsky(pi / 4).value, 0.457983, 1e-6);
  EXPECT_NEAR(lobachevsky(pi / 3).value, 0.338314, 1e-6);
}

TEST(Lobachevsky, ZerosAtMultiplesOfHalfPi) {
  for (int k = -4; k <= 4; ++k) EXPECT_NEAR(lobachevsky(k * pi / 2).value, 0.0, 1e-15) << k;
}

TEST(Lobachevsky, MatchesTanhSinhOracle) {
  for (int i = 1; i < 200; ++i) {
    const double theta = i * pi / 200.0;
    EXPECT_NEAR(lobachevsky(theta).value, oracle::lobachevsky(theta), 1e-12) << theta;
  }
}

TEST(Lobachevsky, ErrorBoundIsSmall) {
  for (int i = 0; i <= 100; ++i) {
    const auto r = lobachevsky(-pi + i * 2 * pi / 100.0);
    EXPECT_LE(r.abs_error_bound, 1e-12);
  }
}

TEST(Lobachevsky, Oddness) {
  for (int i = 0; i <= 1000; ++i) {
    const double theta = -pi + i * 2 * pi / 1000.0;
    EXPECT_LE(std::abs(lobachevsky(-theta).value + lobachevsky(theta).value), 1e-11) << theta;
  }
}

TEST(Lobachevsky, PiPeriodicity) {
  for (int i = 0; i <= 1000; ++i) {
    const double theta = -3 * pi + i * 6 * pi / 1000.0;
    EXPECT_LE(std::abs(lobachevsky(theta + pi).value - lobachevsky(theta).value), 1e-11) << theta;
  }
}

TEST(Lobachevsky, Duplication) {
  for (int i = 0; i <= 1000; ++i) {
    const double theta = -pi + i * 2 * pi / 1000.0;
    const double lhs = lobachevsky(2 * theta).value;
    const double rhs = 2 * lobachevsky(theta).value + 2 * lobachevsky(theta + pi / 2).value;
    EXPECT_LE(std::abs(lhs - rhs), 1e-10) << theta;
  }
}

TEST(Lobachevsky, MaximumAtPiOverSix) {
  double best = -1.0;
  double argmax = 0.0;
  for (int i = 0; i * 1e-4 <= pi; ++i) {
    const double theta = i * 1e-4;
    const double v = lobachevsky(theta).value;
    if (v > best) {
      best = v;
      argmax = theta;
    }
  }
  EXPECT_LE(std::abs(argmax - pi / 6), 1e-3);
}

TEST(Lobachevsky, TwoRoutesAgree) {
  for (int i = 0; i <= 500; ++i) {
    const double theta = -pi + i * 2 * pi / 500.0;
    const auto series = lobachevsky(theta);
    const auto quad = lobachevsky_quadrature(theta);
    EXPECT_LE(std::abs(series.value - quad.value), 1e-10) << theta;
    EXPECT_LE(quad.abs_error_bound, 1e-11);
  }
}

TEST(Lobachevsky, NonFiniteInputIsDomainError) {
  EXPECT_THROW(lobachevsky(std::numeric_limits<double>::quiet_NaN()), DomainError);
  EXPECT_THROW(lobachevsky(std::numeric_limits<double>::infinity()), DomainError);
  EXPECT_THROW(lobachevsky_quadrature(-std::numeric_limits<double>::infinity()), DomainError);
}

TEST(Lobachevsky, LargeArgumentsFold) {
  EXPECT_NEAR(lobachevsky(pi / 4 + 1000 * pi).value, lobachevsky(pi / 4).value, 1e-11);
}

TEST(Catalan, MatchesBoostConstant) {
  const auto g = catalan_constant();
  EXPECT_NEAR(g.value, oracle::catalan(), 1e-15);
  EXPECT_NEAR(g.value, 0.915965, 1e-6);
  EXPECT_LE(g.abs_error_bound, 1e-13);
}

TEST(Catalan, EqualsTwiceLobachevskyPiOverFour) {
  EXPECT_NEAR(catalan_constant().value, 2 * lobachevsky(pi / 4).value, 1e-14);
}

TEST(Catalan, PartialSums) {
  EXPECT_DOUBLE_EQ(catalan_partial_sum(1).value, 1.0);
  EXPECT_NEAR(catalan_partial_sum(2).value, 1.0 - 1.0 / 9.0, 1e-16);
  // Alternating series: the tail is bounded by the first omitted term.
  for (int n : {10, 100, 1000}) {
    const auto s = catalan_partial_sum(n);
    EXPECT_LE(std::abs(s.value - oracle::catalan()), s.abs_error_bound + 1e-15) << n;
    EXPECT_GE(s.abs_error_bound, 1.0 / ((2.0 * n + 1) * (2.0 * n + 1)));
  }
  EXPECT_THROW(catalan_partial_sum(0), DomainError);
}

TEST(Constants, OctahedronAndTetrahedron) {
  EXPECT_NEAR(v_oct().value, 3.663862, 1e-6);
  EXPECT_NEAR(v_tet().value, 1.014941, 1e-6);
  EXPECT_NEAR(v_oct().value - 4 * catalan_constant().value, 0.0, 1e-10);
  EXPECT_NEAR(v_tet().value, 3 * oracle::lobachevsky(pi / 3), 1e-12);
}
