#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "raca/arithmeticity.hpp"

using namespace raca;

namespace {

constexpr int inf = CoxeterMatrix::kInfiniteLabel;

CoxeterMatrix triangle(int a, int b, int c) {
  // Labels on edges 01, 12, 20.
  return {3, {1, a, c, a, 1, b, c, b, 1}};
}

// 2cos(π/m) by floating point, the Gram entry oracle.
double gram_value(int m) { return m == inf ? -2.0 : -2.0 * std::cos(std::numbers::pi / m); }

SurdInteger random_surd(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> coeff(-1'000'000, 1'000'000);
  return {coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
}

}  // namespace

TEST(Surd, RingIdentities) {
  const auto r2 = SurdInteger::sqrt2();
  const auto r3 = SurdInteger::sqrt3();
  const auto r6 = SurdInteger::sqrt6();
  EXPECT_EQ(r2 * r2, SurdInteger(2));
  EXPECT_EQ(r3 * r3, SurdInteger(3));
  EXPECT_EQ(r6 * r6, SurdInteger(6));
  EXPECT_EQ(r2 * r3, r6);
  EXPECT_EQ(r2 * r6, SurdInteger(0, 0, 2, 0));
  EXPECT_EQ(r3 * r6, SurdInteger(0, 3, 0, 0));
  EXPECT_EQ((-r2) * (-r3) * SurdInteger(-1), -r6);
  EXPECT_TRUE(SurdInteger(-7).is_rational_integer());
  EXPECT_FALSE((r2 + SurdInteger(1)).is_rational_integer());
  EXPECT_EQ(r2 - r2, SurdInteger(0));
  EXPECT_TRUE((r2 - r2).is_zero());
}

TEST(Surd, ToString) {
  EXPECT_EQ(SurdInteger(0).to_string(), "0");
  EXPECT_EQ(SurdInteger(2).to_string(), "2");
  EXPECT_EQ((-SurdInteger::sqrt6()).to_string(), "-sqrt(6)");
  EXPECT_EQ(SurdInteger(1, 0, -3, 2).to_string(), "1 - 3*sqrt(3) + 2*sqrt(6)");
}

TEST(Surd, RandomProductsMatchFloatingPoint) {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 10000; ++i) {
    const auto x = random_surd(rng);
    const auto y = random_surd(rng);
    const double exact = (x * y).to_double();
    const double approx = x.to_double() * y.to_double();
    // Relative comparison: products reach ~1e13, where doubles carry ~1e-3 absolute error.
    const double scale = std::max({1.0, std::abs(x.to_double()) * std::abs(y.to_double()),
                                   std::abs(exact)});
    EXPECT_LE(std::abs(exact - approx), 1e-9 * scale) << x.to_string() << " * " << y.to_string();
  }
}

TEST(Surd, RingAxiomsOnRandomElements) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const auto a = random_surd(rng);
    const auto b = random_surd(rng);
    const auto c = random_surd(rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b - b, a);
  }
}

TEST(Gram, Entries) {
  EXPECT_EQ(doubled_gram_entry(2), SurdInteger(0));
  EXPECT_EQ(doubled_gram_entry(3), SurdInteger(-1));
  EXPECT_EQ(doubled_gram_entry(4), -SurdInteger::sqrt2());
  EXPECT_EQ(doubled_gram_entry(6), -SurdInteger::sqrt3());
  EXPECT_EQ(doubled_gram_entry(inf), SurdInteger(-2));
  for (int m : {2, 3, 4, 6, inf}) EXPECT_NEAR(doubled_gram_entry(m).to_double(), gram_value(m), 1e-15) << m;
  EXPECT_THROW(doubled_gram_entry(5), DomainError);
  EXPECT_THROW(doubled_gram_entry(8), DomainError);
}

TEST(Gram, Delta444Matrix) {
  const auto g = gram_from_coxeter(CoxeterMatrix::path({4, 4, 4}));
  const SurdInteger z = 0;
  const SurdInteger two = 2;
  const SurdInteger m = -SurdInteger::sqrt2();
  const std::vector<SurdInteger> expected{two, m, z, z, m, two, m, z, z, m, two, m, z, z, m, two};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(g.at(i, j), expected[static_cast<std::size_t>(i * 4 + j)]) << i << j;
}

TEST(Gram, UnsupportedLabel) {
  EXPECT_THROW(gram_from_coxeter(CoxeterMatrix::path({5, 3, 3})), DomainError);
  try {
    gram_from_coxeter(CoxeterMatrix::path({5, 3, 3}));
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("entry outside Z[sqrt2,sqrt3]"), std::string::npos);
  }
}

TEST(Coxeter, MatrixValidation) {
  EXPECT_THROW(CoxeterMatrix(2, {1, 3, 4, 1}), InputError);
  EXPECT_THROW(CoxeterMatrix(2, {2, 3, 3, 1}), InputError);
  EXPECT_THROW(CoxeterMatrix(2, {1, 1, 1, 1}), InputError);
  EXPECT_THROW(CoxeterMatrix(2, {1, 3, 3}), InputError);
  EXPECT_NO_THROW(CoxeterMatrix(2, {1, inf, inf, 1}));
}

TEST(CyclicProducts, Delta444) {
  const auto products = cyclic_products(gram_from_coxeter(CoxeterMatrix::path({4, 4, 4})), 4);
  // A path has only 2-cycles.
  EXPECT_EQ(products, (std::set<SurdInteger>{SurdInteger(2)}));
}

TEST(CyclicProducts, Triangle463) {
  const auto products = cyclic_products(gram_from_coxeter(triangle(4, 6, 3)), 3);
  EXPECT_TRUE(products.contains(-SurdInteger::sqrt6()));
  EXPECT_TRUE(products.contains(SurdInteger(2)));
  EXPECT_TRUE(products.contains(SurdInteger(3)));
  EXPECT_TRUE(products.contains(SurdInteger(1)));
  EXPECT_EQ(products.size(), 4u);
}

TEST(CyclicProducts, DiagonalOnlyIsEmpty) {
  const auto g = gram_from_coxeter(CoxeterMatrix(3, {1, 2, 2, 2, 1, 2, 2, 2, 1}));
  EXPECT_TRUE(cyclic_products(g, 3).empty());
  EXPECT_THROW(cyclic_products(g, 1), DomainError);
}

TEST(CyclicProducts, MatchFloatingPointWalks) {
  // Every product equals the floating-point product along the reported cycle,
  // and reversing the cycle gives the same product.
  const auto g = gram_from_coxeter(CoxeterMatrix(4, {1, 4, 6, 3, 4, 1, inf, 4, 6, inf, 1, 3, 3, 4, 3, 1}));
  std::size_t count = 0;
  for_each_cyclic_product(g, 4, [&](const CyclicProduct& c) {
    ++count;
    double fp = 1.0;
    SurdInteger reversed = 1;
    const std::size_t m = c.cycle.size();
    for (std::size_t i = 0; i < m; ++i) {
      fp *= g.at(c.cycle[i], c.cycle[(i + 1) % m]).to_double();
      reversed *= g.at(c.cycle[(i + 1) % m], c.cycle[i]);
    }
    EXPECT_NEAR(c.product.to_double(), fp, 1e-9);
    EXPECT_EQ(c.product, reversed);
    return true;
  });
  // K4: 6 two-cycles, 4 triangles and 3 four-cycles, each longer cycle in both orientations.
  EXPECT_EQ(count, 6u + 2 * 4u + 2 * 3u);
}

TEST(CyclicProducts, RelabelingInvariance) {
  const auto g = gram_from_coxeter(CoxeterMatrix(4, {1, 4, 6, 3, 4, 1, inf, 2, 6, inf, 1, 4, 3, 2, 4, 1}));
  const auto reference = cyclic_products(g, 4);
  std::vector<int> perm{0, 1, 2, 3};
  do {
    EXPECT_EQ(cyclic_products(g.permuted(perm), 4), reference);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(Arithmeticity, KnownDiagrams) {
  EXPECT_TRUE(is_arithmetic_noncocompact(gram_from_coxeter(CoxeterMatrix::path({4, 4, 4}))).arithmetic);
  EXPECT_TRUE(is_arithmetic_noncocompact(gram_from_coxeter(CoxeterMatrix::path({3, 4, 4}))).arithmetic);

  const auto r = is_arithmetic_noncocompact(gram_from_coxeter(triangle(4, 6, 3)), 3);
  EXPECT_FALSE(r.arithmetic);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->product, -SurdInteger::sqrt6());
  EXPECT_EQ(r.witness->cycle.size(), 3u);
}

TEST(Arithmeticity, CycleLengthCutoff) {
  // With only 2-cycles inspected the triangle looks arithmetic.
  EXPECT_TRUE(is_arithmetic_noncocompact(gram_from_coxeter(triangle(4, 6, 3)), 2).arithmetic);
  EXPECT_THROW(is_arithmetic_noncocompact(gram_from_coxeter(triangle(4, 6, 3)), 1), DomainError);
}

TEST(Arithmeticity, IntegerEntriesAlwaysArithmetic) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> pick(0, 2);
  const int labels[] = {2, 3, inf};
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 4;
    std::vector<int> m(static_cast<std::size_t>(n * n), 1);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const int label = labels[pick(rng)];
        m[static_cast<std::size_t>(i * n + j)] = label;
        m[static_cast<std::size_t>(j * n + i)] = label;
      }
    EXPECT_TRUE(is_arithmetic_noncocompact(gram_from_coxeter(CoxeterMatrix(n, m))).arithmetic);
  }
}
