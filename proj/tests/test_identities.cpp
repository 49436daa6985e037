#include <gtest/gtest.h>

#include <random>

#include "kkg/identities.hpp"

using namespace kkg;

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(2, 5), 0u);
  EXPECT_EQ(static_cast<u64>(binomial(60, 30)), 118264581564861424ull);
}

TEST(ChuSum, ExactValues) {
  EXPECT_EQ(static_cast<u64>(chu_sum_exact(5, 1, 1)), 20u);
  EXPECT_EQ(static_cast<u64>(chu_sum_exact(7, 2, 1)), 70u);
  // The full sum to p is C(p + 1, k + l + 1); the last term only matters for k = 0.
  for (u64 p : {5, 7, 11}) {
    for (u64 k = 0; k < 4; ++k) {
      for (u64 l = 0; l < 4; ++l) {
        const u128 full = chu_sum_exact(p, k, l) + binomial(0, k) * binomial(p, l);
        EXPECT_EQ(full, binomial(p + 1, k + l + 1));
      }
    }
  }
}

TEST(ChuSum, VanishesWhenPAtLeast2n) {
  for (u64 p : {5, 7, 11, 13, 17, 19, 23}) {
    for (u64 k = 0; 2 * (k + 1) <= p; ++k)
      for (u64 l = 0; 2 * (l + 1) <= p; ++l) EXPECT_EQ(chu_sum(p, k, l), 0u) << p << " " << k << " " << l;
  }
  // Outside the range: k = l = 2 at p = 5 gives C(6, 5) = 6.
  EXPECT_EQ(chu_sum(5, 2, 2), 1u);
}

TEST(PowerIdentity, MatchesDirectPowers) {
  for (auto kind : {RingKind::Poly, RingKind::Witt}) {
    auto R = Ring::make(kind, 5, 1, 2);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 100; ++i) {
      const Mat A = random_unitriangular(R, 2, rng), X = random_matrix(R, 2, rng);
      const Mat g = mat_mul(A, mat_add(Mat::identity(R, 2), mat_scale(R->uniformizer(), X)));
      for (u64 m : {0, 1, 2, 5, 13}) EXPECT_EQ(mat_pow(g, m), unitriangular_power(A, X, m));
      const Mat B = b_matrix(A, X, 5);
      EXPECT_TRUE(mat_reduce(B, 1) == Mat(R->truncated(1), 2));
      EXPECT_EQ(mat_pow(g, 5), mat_pow(A, 5));
    }
  }
}

TEST(PowerIdentity, RejectsBadInput) {
  auto R = Ring::make(RingKind::Poly, 5, 1, 3);
  auto R2 = Ring::make(RingKind::Poly, 5, 1, 2);
  EXPECT_THROW(unitriangular_power(Mat::identity(R, 2), Mat::identity(R, 2), 3), std::invalid_argument);
  EXPECT_THROW(unitriangular_power(parse_matrix(R2, "1,0;1,1"), Mat::identity(R2, 2), 3), std::invalid_argument);
}

TEST(BMatrix, CanSurviveBelowTheBound) {
  // n = 3, p = 5 < 2n: B mod pi is X_{31} times C(6, 5) in the corner.
  auto R = Ring::make(RingKind::Poly, 5, 1, 2);
  const Mat A = parse_matrix(R, "1,1,0;0,1,1;0,0,1");
  const Mat X = parse_matrix(R, "0,0,0;0,0,0;1,0,0");
  const Mat Bbar = mat_reduce(b_matrix(A, X, 5), 1);
  EXPECT_FALSE(Bbar == Mat(R->truncated(1), 3));
}
