#include <random>

#include <gtest/gtest.h>

#include "sgroth/core.hpp"

using namespace sgroth;

namespace {

Rational q(int num, int den = 1) { return Rational(num, den); }

RationalVector rv(std::initializer_list<Rational> xs) {
  return RationalVector(std::vector<Rational>(xs));
}

}  // namespace

TEST(PartitionTest, StripsTrailingZeros) {
  EXPECT_EQ(Partition({3, 1, 0}), Partition({3, 1}));
  EXPECT_EQ(Partition({3, 1, 0}).length(), 2);
  EXPECT_EQ(Partition({0, 0}), Partition{});
  EXPECT_EQ(Partition({3, 1}).padded(4), (std::vector<int>{3, 1, 0, 0}));
}

TEST(PartitionTest, RejectsIncreasingOrNegativeParts) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
  EXPECT_THROW(Partition({3, 1, 1}).padded(2), std::invalid_argument);
}

TEST(PartitionTest, Containment) {
  EXPECT_TRUE(Partition({3, 2, 1}).contains(Partition({3, 1})));
  EXPECT_FALSE(Partition({3, 1}).contains(Partition({2, 2})));
  EXPECT_TRUE(Partition({1}).contains(Partition{}));
}

TEST(PartitionTest, PartitionCountsMatchKnownSequence) {
  // p(0..8) = 1 1 2 3 5 7 11 15 22
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int size = 0; size <= 8; ++size) {
    EXPECT_EQ(static_cast<int>(partitions_of(size, size).size()), expected[size]) << size;
  }
  // 4x4 box holds C(8,4) partitions.
  EXPECT_EQ(partitions_in_box(4, 4).size(), 70u);
}

TEST(DominanceTest, Examples) {
  EXPECT_TRUE(dominance_leq({2, 2}, {3, 1}));
  EXPECT_FALSE(dominance_leq({3, 1}, {2, 2}));
  EXPECT_FALSE(dominance_leq({3, 2, 0}, {3, 1, 1}));
  EXPECT_TRUE(dominance_leq({3, 1, 1}, {3, 2, 0}));
}

TEST(DominanceTest, UnequalSizesAreAnError) {
  EXPECT_THROW(dominance_leq({2}, {1}), std::domain_error);
}

TEST(DominanceTest, PartialOrderOnSmallSizes) {
  for (int size = 0; size <= 8; ++size) {
    const auto parts = partitions_of(size, size);
    for (const auto& a : parts) {
      EXPECT_TRUE(dominance_leq(a, a));
      for (const auto& b : parts) {
        if (a != b) EXPECT_FALSE(dominance_leq(a, b) && dominance_leq(b, a)) << a << b;
        if (!dominance_leq(a, b)) continue;
        for (const auto& c : parts) {
          if (dominance_leq(b, c)) EXPECT_TRUE(dominance_leq(a, c)) << a << b << c;
        }
      }
    }
  }
}

TEST(SortDecreasingTest, Examples) {
  EXPECT_EQ(sort_decreasing(ExponentVector{0, 3, 1}), (ExponentVector{3, 1, 0}));
  EXPECT_EQ(sort_decreasing(ExponentVector{1, 1, 1}), (ExponentVector{1, 1, 1}));
  EXPECT_EQ(sort_decreasing(rv({q(1, 2), q(3, 2), q(1)})), rv({q(3, 2), q(1), q(1, 2)}));
}

TEST(MajorizationTest, Examples) {
  EXPECT_TRUE(majorizes(Partition{2, 1, 0}, rv({1, 1, 1})));
  EXPECT_TRUE(majorizes(Partition{2, 1, 0}, rv({0, 1, 2})));
  EXPECT_FALSE(majorizes(Partition{3, 2, 2}, rv({3, 3, 1})));
  EXPECT_FALSE(majorizes(Partition{3, 2, 2}, ExponentVector{3, 3, 1}));
}

TEST(MajorizationTest, Errors) {
  EXPECT_THROW(majorizes(Partition{2, 1}, rv({1, 1})), std::domain_error);
  EXPECT_THROW(majorizes(Partition{2}, rv({3, -1})), std::invalid_argument);
}

TEST(ConvexCombinationTest, Examples) {
  const std::vector<Rational> one{q(1)};
  const std::vector<RationalVector> single{rv({3, 1, 0})};
  EXPECT_EQ(convex_combination(one, single), rv({3, 1, 0}));

  const std::vector<Rational> halves{q(1, 2), q(1, 2)};
  const std::vector<RationalVector> ends{rv({2, 0}), rv({0, 2})};
  EXPECT_EQ(convex_combination(halves, ends), rv({1, 1}));

  const std::vector<Rational> w{q(1, 3), q(2, 3)};
  const std::vector<RationalVector> vs{rv({3, 1, 0}), rv({3, 2, 1})};
  EXPECT_EQ(convex_combination(w, vs), rv({3, q(5, 3), q(2, 3)}));
}

TEST(ConvexCombinationTest, Errors) {
  const std::vector<RationalVector> vs{rv({1, 0}), rv({0, 1})};
  const std::vector<Rational> bad_sum{q(1, 2), q(1, 3)};
  EXPECT_THROW(convex_combination(bad_sum, vs), std::invalid_argument);
  const std::vector<RationalVector> ragged{rv({1, 0}), rv({1})};
  const std::vector<Rational> halves{q(1, 2), q(1, 2)};
  EXPECT_THROW(convex_combination(halves, ragged), std::invalid_argument);
}

TEST(ConvexCombinationTest, UnitWeightSelectsVector) {
  const std::vector<RationalVector> vs{rv({1, 2, 3}), rv({q(1, 7), 0, 5}), rv({4, 4, 4})};
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::vector<Rational> w(vs.size(), q(0));
    w[i] = 1;
    EXPECT_EQ(convex_combination(w, vs), vs[i]);
  }
}

namespace {

RationalVector random_nonneg(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(0, 40);
  std::uniform_int_distribution<int> den(1, 12);
  RationalVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Rational(num(rng), den(rng));
  return v;
}

}  // namespace

// a + b is majorized by a↓ + b↓.
TEST(MajorizationProperty, SumOfSortedMajorizesSum) {
  std::mt19937_64 rng(20170522);
  for (int trial = 0; trial < 1500; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const RationalVector a = random_nonneg(rng, n);
    const RationalVector b = random_nonneg(rng, n);
    const RationalVector sorted_sum = sort_decreasing(a) + sort_decreasing(b);
    ASSERT_TRUE(majorizes(sorted_sum, a + b)) << a << " " << b;
  }
}

TEST(MajorizationProperty, InvariantUnderPermutation) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 3;
    RationalVector v = random_nonneg(rng, n);
    // Majorant: the sorted vector, sometimes nudged to a strictly larger one.
    RationalVector mu = sort_decreasing(v);
    if (trial % 2 && mu[n - 1] > 0) {
      const Rational eps = mu[n - 1] / 2;
      mu[0] += eps;
      mu[n - 1] -= eps;
      mu = sort_decreasing(mu);
    }
    const bool expected = majorizes(mu, v);
    std::vector<Rational> entries = v.entries();
    std::shuffle(entries.begin(), entries.end(), rng);
    EXPECT_EQ(majorizes(mu, RationalVector(entries)), expected);
  }
}
