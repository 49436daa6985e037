#include <gtest/gtest.h>

#include <random>

#include "kkg/identities.hpp"
#include "kkg/matrix.hpp"

using namespace kkg;

TEST(Matrix, ParseAndRender) {
  auto R = Ring::make(RingKind::Poly, 5, 1, 2);
  const Mat m = parse_matrix(R, "1,1,0;t,1,1;t,0,1");
  EXPECT_EQ(m.n(), 3u);
  EXPECT_EQ(render_matrix(m), "1, 1, 0; t, 1, 1; t, 0, 1");
  EXPECT_EQ(parse_matrix(R, render_matrix(m)), m);
  EXPECT_EQ(mat_det(m), R->one());
  try {
    parse_matrix(R, "1,1;t,?");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 6u);
  }
  EXPECT_THROW(parse_matrix(R, "1,1;1"), ParseError);
}

TEST(Matrix, DeterminantAgreesAcrossMethods) {
  for (auto kind : {RingKind::Poly, RingKind::Witt}) {
    auto R = Ring::make(kind, 3, 1, 3);
    std::mt19937_64 rng(11);
    for (unsigned n = 1; n <= 4; ++n) {
      for (int i = 0; i < 50; ++i) {
        const Mat a = random_matrix(R, n, rng);
        EXPECT_EQ(det_leibniz(a), det_elimination(a)) << render_matrix(a);
      }
    }
  }
}

TEST(Matrix, DeterminantMultiplicativeAndInverse) {
  for (auto kind : {RingKind::Poly, RingKind::Witt}) {
    auto R = Ring::make(kind, 2, 2, 3);
    std::mt19937_64 rng(3);
    for (unsigned n : {2u, 3u, 5u}) {
      for (int i = 0; i < 30; ++i) {
        const Mat a = random_matrix(R, n, rng), b = random_matrix(R, n, rng);
        EXPECT_EQ(mat_det(mat_mul(a, b)), R->mul(mat_det(a), mat_det(b)));
        if (R->is_unit(mat_det(a))) {
          const Mat ai = mat_inverse(a);
          EXPECT_TRUE(mat_mul(a, ai).is_identity());
          EXPECT_TRUE(mat_mul(ai, a).is_identity());
        } else {
          EXPECT_THROW(mat_inverse(a), ArithmeticError);
        }
      }
    }
  }
}

TEST(Matrix, CodesRoundTrip) {
  auto R = Ring::make(RingKind::Witt, 3, 1, 3);
  std::mt19937_64 rng(5);
  ASSERT_TRUE(mat_code_fits(*R, 2));
  for (int i = 0; i < 100; ++i) {
    const Mat a = random_matrix(R, 2, rng);
    EXPECT_EQ(mat_from_code(R, 2, mat_code(a)), a);
  }
}

TEST(Matrix, ReduceIsHomomorphism) {
  auto R = Ring::make(RingKind::Witt, 2, 1, 4);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const Mat a = random_matrix(R, 3, rng), b = random_matrix(R, 3, rng);
    for (unsigned s = 1; s <= 4; ++s) EXPECT_EQ(mat_reduce(mat_mul(a, b), s), mat_mul(mat_reduce(a, s), mat_reduce(b, s)));
  }
}
