#include <random>

#include <gtest/gtest.h>

#include "sgroth/poly.hpp"

using namespace sgroth;

namespace {

SparsePolynomial x(int n, int i) { return SparsePolynomial::variable(n, i); }

SparsePolynomial random_poly(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> exp(0, 2);
  std::uniform_int_distribution<int> coeff(-3, 3);
  SparsePolynomial f(n);
  for (int t = 0; t < 4; ++t) {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (auto& v : e) v = exp(rng);
    f.add_term(ExponentVector(e), coeff(rng));
  }
  return f;
}

bool canonical(const SparsePolynomial& f) {
  for (const auto& [alpha, c] : f.terms()) {
    if (c == 0 || alpha.dimension() != f.ambient()) return false;
  }
  return true;
}

}  // namespace

TEST(PolyTest, RingOperations) {
  EXPECT_TRUE(add(x(2, 1), scale(-1, x(2, 1))).is_zero());
  const auto product = multiply(x(2, 1) + x(2, 2), x(2, 1) - x(2, 2));
  EXPECT_EQ(product, x(2, 1) * x(2, 1) - x(2, 2) * x(2, 2));
  EXPECT_EQ(product.term_count(), 2u);
  const auto doubled = scale(2, x(2, 1) * x(2, 2));
  EXPECT_EQ(doubled.coefficient({1, 1}), 2);
  EXPECT_EQ(doubled.term_count(), 1u);
}

TEST(PolyTest, AmbientMismatchIsAnError) {
  EXPECT_THROW(x(2, 1) + x(3, 1), std::invalid_argument);
  EXPECT_THROW(x(2, 1) * x(3, 1), std::invalid_argument);
  EXPECT_THROW(x(2, 1).coefficient({1, 0, 0}), std::invalid_argument);
}

TEST(PolyTest, HomogeneousComponent) {
  const auto f = x(2, 1) + x(2, 1) * x(2, 2);
  EXPECT_EQ(f.homogeneous_component(1), x(2, 1));
  EXPECT_TRUE(f.homogeneous_component(3).is_zero());
  EXPECT_THROW(f.homogeneous_component(-1), std::invalid_argument);
}

TEST(PolyTest, Support) {
  EXPECT_TRUE(SparsePolynomial(3).support().empty());
  const auto f = x(2, 1) * x(2, 1) - x(2, 2) * x(2, 2);
  EXPECT_EQ(f.support(), (std::set<ExponentVector>{{2, 0}, {0, 2}}));
}

TEST(PolyTest, Symmetry) {
  EXPECT_TRUE((x(2, 1) + x(2, 2)).is_symmetric());
  EXPECT_FALSE((x(2, 1) - x(2, 2)).is_symmetric());
  EXPECT_FALSE((x(3, 1) + x(3, 2)).is_symmetric());
  EXPECT_TRUE(SparsePolynomial::constant(3, 5).is_symmetric());
}

TEST(PolyTest, Coefficient) {
  EXPECT_EQ((x(2, 1) + x(2, 2)).coefficient({1, 0}), 1);
  EXPECT_EQ(SparsePolynomial(2).coefficient({4, 1}), 0);
}

TEST(PolyTest, GradedLexIteration) {
  const auto f = x(2, 1) * x(2, 1) + x(2, 2) + x(2, 1) * x(2, 2) + SparsePolynomial::constant(2, 1);
  std::vector<ExponentVector> order;
  for (const auto& [alpha, c] : f.terms()) order.push_back(alpha);
  EXPECT_EQ(order, (std::vector<ExponentVector>{{0, 0}, {0, 1}, {1, 1}, {2, 0}}));
  EXPECT_EQ(f.degree_range(), std::make_pair(0, 2));
}

TEST(PolyTest, BigCoefficientsDoNotOverflow) {
  SparsePolynomial f = SparsePolynomial::constant(1, Integer(1) << 62);
  f = f * f * f;
  EXPECT_EQ(f.coefficient({0}), Integer(1) << 186);
}

TEST(PolyProperty, MultiplyCommutesAndAssociates) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 3;
    const auto f = random_poly(rng, n);
    const auto g = random_poly(rng, n);
    const auto h = random_poly(rng, n);
    ASSERT_EQ(f * g, g * f);
    ASSERT_EQ((f * g) * h, f * (g * h));
    ASSERT_EQ(f * (g + h), f * g + f * h);
    ASSERT_TRUE(canonical(f * g - g * f));
    ASSERT_TRUE(canonical(f + g));
  }
}

TEST(PolyProperty, ComponentsSumToPolynomial) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_poly(rng, 3) * random_poly(rng, 3);
    const auto [lo, hi] = f.degree_range();
    SparsePolynomial sum(3);
    for (int k = lo; k <= hi; ++k) sum += f.homogeneous_component(k);
    ASSERT_EQ(sum, f);
  }
}
