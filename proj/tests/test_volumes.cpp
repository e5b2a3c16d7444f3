#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "raca/volumes.hpp"

using namespace raca;

namespace {

constexpr double pi = std::numbers::pi;

double lobell_oracle(int n) {
  const double theta = pi / 2 - std::acos(1.0 / (2.0 * std::cos(pi / n)));
  return n / 2.0 *
         (2 * oracle::lobachevsky(theta) + oracle::lobachevsky(theta + pi / n) +
          oracle::lobachevsky(theta - pi / n) - oracle::lobachevsky(2 * theta - pi / 2));
}

double antiprism_oracle(int n) {
  return 2.0 * n * (oracle::lobachevsky(pi / 4 + pi / (2.0 * n)) + oracle::lobachevsky(pi / 4 - pi / (2.0 * n)));
}

}  // namespace

TEST(OrthoschemeDelta, HandValues) {
  EXPECT_NEAR(orthoscheme_delta(pi / 4, pi / 4, pi / 4), pi / 4, 1e-14);
  EXPECT_NEAR(orthoscheme_delta(pi / 3, pi / 4, pi / 4), pi / 4, 1e-14);
  // cos²β = sin²α sin²γ = 1/4: zero radicand.
  EXPECT_NEAR(orthoscheme_delta(pi / 4, pi / 3, pi / 4), 0.0, 1e-7);
}

TEST(OrthoschemeDelta, NegativeRadicandIsDomainError) {
  EXPECT_THROW(orthoscheme_delta(pi / 2 - 1e-3, pi / 2, pi / 2 - 1e-3), DomainError);
  EXPECT_THROW(orthoscheme_delta(pi / 3, pi / 3, pi / 3), DomainError);
  EXPECT_THROW(orthoscheme_volume(pi / 3, pi / 3, pi / 3), DomainError);
}

TEST(OrthoschemeVolume, ClosedForms) {
  const double l = oracle::lobachevsky(pi / 4);
  EXPECT_NEAR(orthoscheme_volume(pi / 3, pi / 4, pi / 4).value, l / 6, 1e-12);
  EXPECT_NEAR(orthoscheme_volume(pi / 4, pi / 4, pi / 4).value, l / 2, 1e-12);
  EXPECT_NEAR(orthoscheme_volume(pi / 3, pi / 4, pi / 4).value, 0.076331, 1e-6);
  EXPECT_NEAR(orthoscheme_volume(pi / 4, pi / 4, pi / 4).value, 0.228991, 1e-6);
  EXPECT_EQ(orthoscheme_volume(pi / 4, pi / 4, pi / 4).formula, "kellerhals_orthoscheme");
}

TEST(OrthoschemeVolume, TwelveCopiesGiveCatalan) {
  EXPECT_NEAR(12 * orthoscheme_volume(pi / 3, pi / 4, pi / 4).value, oracle::catalan(), 1e-9);
}

TEST(OrthoschemeVolume, SymmetricInAlphaGamma) {
  // Needs alpha, gamma >= pi/4 and sin(alpha) sin(gamma) <= cos(beta) = 1/sqrt(2).
  for (double a : {pi / 4, 0.8, 0.9})
    for (double c : {pi / 4, 0.85, pi / 3}) {
      const double b = pi / 4;
      EXPECT_NEAR(orthoscheme_volume(a, b, c).value, orthoscheme_volume(c, b, a).value, 1e-13);
    }
}

TEST(LobellVolume, KnownValues) {
  EXPECT_NEAR(lobell_volume(5).value, 4.306207, 1e-6);
  EXPECT_NEAR(lobell_volume(6).value, 6.023046, 1e-6);
  for (int n : {5, 6, 7, 12, 50}) EXPECT_NEAR(lobell_volume(n).value, lobell_oracle(n), 1e-10) << n;
}

TEST(LobellVolume, Monotone) {
  for (int n = 5; n < 100; ++n) EXPECT_GT(lobell_volume(n + 1).value, lobell_volume(n).value) << n;
}

TEST(LobellVolume, Asymptotics) {
  EXPECT_NEAR(lobell_volume(10000).value / 10000.0, 1.25 * v_tet().value, 1e-3);
}

TEST(LobellVolume, DomainErrors) {
  EXPECT_THROW(lobell_volume(4), DomainError);
  EXPECT_THROW(lobell_volume(kMaxFamilyIndex + 1), DomainError);
  EXPECT_NO_THROW(lobell_volume(kMaxFamilyIndex));
}

TEST(AntiprismVolume, KnownValues) {
  EXPECT_NEAR(antiprism_volume(3).value, 3.663862, 1e-6);
  EXPECT_NEAR(antiprism_volume(3).value, v_oct().value, 1e-10);
  EXPECT_NEAR(antiprism_volume(3).value, 8 * oracle::lobachevsky(pi / 4), 1e-10);
  for (int n : {3, 4, 5, 9, 40}) EXPECT_NEAR(antiprism_volume(n).value, antiprism_oracle(n), 1e-10) << n;
  // 30-digit mpmath value of the closed form at n = 4.
  EXPECT_NEAR(antiprism_volume(4).value, 6.0230460200471888, 1e-12);
  EXPECT_THROW(antiprism_volume(2), DomainError);
}

TEST(NamedVolume, Values) {
  const double g = oracle::catalan();
  EXPECT_NEAR(named_volume("P32").value, g, 1e-12);
  EXPECT_NEAR(named_volume("P32").value, 0.915965, 1e-6);
  EXPECT_NEAR(named_volume("P28").value, 2 * g, 1e-12);
  EXPECT_NEAR(named_volume("P28").value, 1.831931, 2e-6);
  EXPECT_NEAR(named_volume("P34").value, antiprism_oracle(4) / 4, 1e-12);
  EXPECT_NEAR(named_volume("P34").value, 1.505762, 1e-6);
  EXPECT_NEAR(named_volume("Delta344").value, g / 12, 1e-12);
  EXPECT_NEAR(named_volume("Delta444").value, g / 4, 1e-12);
  EXPECT_NEAR(named_volume("DeltaPrime344").value, g / 2, 1e-12);
  EXPECT_NEAR(named_volume("lobell(6)").value, lobell_volume(6).value, 0.0);
  EXPECT_NEAR(named_volume("Antiprism(5)").value, antiprism_volume(5).value, 0.0);
}

TEST(NamedVolume, Decompositions) {
  EXPECT_NEAR(named_volume("P32").value - 12 * orthoscheme_volume(pi / 3, pi / 4, pi / 4).value, 0.0, 1e-10);
  EXPECT_NEAR(named_volume("P28").value - 8 * orthoscheme_volume(pi / 4, pi / 4, pi / 4).value, 0.0, 1e-10);
  EXPECT_NEAR(named_volume("P32").value - catalan_constant().value, 0.0, 1e-9);
}

TEST(NamedVolume, OrderingOfCandidateVolumes) {
  const double g = catalan_constant().value;
  EXPECT_LT(g, named_volume("P34").value);
  EXPECT_LT(named_volume("P34").value, 2 * g);
}

TEST(NamedVolume, ParseErrors) {
  EXPECT_THROW(named_volume("P99"), InputError);
  EXPECT_THROW(named_volume("Lobell()"), InputError);
  EXPECT_THROW(named_volume("Lobell(x)"), InputError);
  EXPECT_THROW(named_volume("Lobell(4)"), DomainError);
  EXPECT_EQ(parse_polyhedron_name("ANTIPRISM(7)").to_string(), "Antiprism(7)");
}

TEST(Bounds, Compact) {
  const auto b = atkinson_bounds_compact(20);
  EXPECT_NEAR(b.lower, 12 * v_oct().value / 32, 1e-12);
  EXPECT_NEAR(b.upper, 50 * v_tet().value / 8, 1e-12);
  EXPECT_NEAR(b.lower, 1.373948, 1e-6);
  EXPECT_NEAR(b.upper, 6.343385, 1e-6);
  EXPECT_LE(b.lower, lobell_volume(5).value);
  EXPECT_LT(lobell_volume(5).value, b.upper);
  EXPECT_THROW(atkinson_bounds_compact(8), DomainError);
  EXPECT_THROW(atkinson_bounds_compact(21), DomainError);
}

TEST(Bounds, Ideal) {
  const auto six = atkinson_bounds_ideal(6);
  EXPECT_NEAR(six.lower, v_oct().value, 1e-12);
  EXPECT_NEAR(six.upper, v_oct().value, 1e-12);
  EXPECT_TRUE(six.lower_attained);
  const auto eight = atkinson_bounds_ideal(8);
  EXPECT_NEAR(eight.lower, 5.495793, 1e-6);
  EXPECT_NEAR(eight.upper, 7.327724, 1e-6);
  EXPECT_FALSE(eight.lower_attained);
  EXPECT_THROW(atkinson_bounds_ideal(5), DomainError);
}

TEST(Bounds, MixedLower) {
  const double g = oracle::catalan();
  EXPECT_NEAR(mixed_lower_bound(1, 18), 14 * g / 8, 1e-12);
  EXPECT_NEAR(mixed_lower_bound(1, 18), 1.602939, 1e-6);
  EXPECT_NEAR(mixed_lower_bound(3, 2), 0.686974, 1e-6);
  EXPECT_EQ(mixed_lower_bound(2, 0), 0.0);
  EXPECT_THROW(mixed_lower_bound(0, 4), DomainError);
  EXPECT_THROW(mixed_lower_bound(2, 3), DomainError);
  EXPECT_THROW(mixed_lower_bound(2, -2), DomainError);
}

TEST(Bounds, NamedPolyhedraLieInsideMixedBounds) {
  struct Case {
    const char* name;
    int v_ideal;
    int v_finite;
  };
  for (const auto& c : {Case{"P32", 3, 2}, Case{"P28", 2, 8}, Case{"P34", 3, 4}}) {
    const double vol = named_volume(c.name).value;
    const double upper = v_oct().value / 2 * c.v_ideal + 5 * v_tet().value / 8 * c.v_finite - v_oct().value / 2;
    EXPECT_LE(mixed_lower_bound(c.v_ideal, c.v_finite), vol) << c.name;
    EXPECT_LT(vol, upper) << c.name;
    EXPECT_NEAR(atkinson_bounds_mixed(c.v_ideal, c.v_finite).upper, upper, 1e-12) << c.name;
    EXPECT_NEAR(mixed_upper_bound(c.v_ideal, c.v_finite), upper, 1e-12) << c.name;
  }
}

TEST(Volumes, ErrorBoundsAreTight) {
  EXPECT_LE(lobell_volume(5).abs_error_bound, 1e-10);
  EXPECT_LE(antiprism_volume(4).abs_error_bound, 1e-10);
  EXPECT_LE(orthoscheme_volume(pi / 3, pi / 4, pi / 4).abs_error_bound, 1e-12);
}
