#include <gtest/gtest.h>

#include "kkg/oracle.hpp"

using namespace kkg;

namespace {

struct Named {
  const char* label;
  Family fam;
  unsigned n;
  RingKind kind;
  u64 p;
  unsigned r;
  u64 prime;
};

}  // namespace

class OracleGroups : public ::testing::TestWithParam<Named> {};

TEST_P(OracleGroups, LinearAlgebraMatchesClassCounts) {
  const auto c = GetParam();
  const auto g = make_group(c.fam, c.n, c.kind, c.p, 1, c.r);
  const auto t = enumerate_group(g);
  const auto part = conjugacy_classes(t);
  const auto A = algebra_table(t, c.prime);
  const auto prof = oracle_profile(A, t, part);
  EXPECT_TRUE(prof.table_ok);
  EXPECT_TRUE(prof.commutator_codim_ok);
  EXPECT_TRUE(prof.space_chain_ok);
  EXPECT_TRUE(prof.ideal_chain_ok);
  EXPECT_TRUE(prof.nondegenerate_ok);
  EXPECT_TRUE(prof.additivity_ok);
  EXPECT_TRUE(prof.terminal_ok);
  EXPECT_FALSE(prof.first_mismatch.has_value());
  EXPECT_EQ(prof.perp_dims.front(), part.count());
}

INSTANTIATE_TEST_SUITE_P(
    Small, OracleGroups,
    ::testing::Values(Named{"C4", Family::GL, 1, RingKind::Witt, 5, 1, 2}, Named{"S3_p2", Family::SL, 2, RingKind::Witt, 2, 1, 2},
                      Named{"S3_p3", Family::SL, 2, RingKind::Witt, 2, 1, 3},
                      Named{"SL2_Z4", Family::SL, 2, RingKind::Witt, 2, 2, 2},
                      Named{"SL2_F2t2", Family::SL, 2, RingKind::Poly, 2, 2, 2},
                      Named{"GL2_F3", Family::GL, 2, RingKind::Witt, 3, 1, 3},
                      Named{"GL2_Z4", Family::GL, 2, RingKind::Witt, 2, 2, 2}),
    [](const auto& info) { return std::string(info.param.label); });

TEST(Subspace, RowAndNullSpace) {
  // Over F_3: rows (1,1,0), (2,2,0), (0,1,1).
  const std::vector<FpVec> rows{{1, 1, 0}, {2, 2, 0}, {0, 1, 1}};
  const auto S = row_space(rows, 3, 3);
  EXPECT_EQ(S.rank(), 2u);
  EXPECT_TRUE(S.contains(FpVec{1, 2, 1}));
  EXPECT_FALSE(S.contains(FpVec{1, 0, 0}));
  const auto K = null_space(rows, 3, 3);
  ASSERT_EQ(K.rank(), 1u);
  for (const auto& row : rows) {
    u64 dot = 0;
    for (int i = 0; i < 3; ++i) dot += row[i] * K.basis[0][i];
    EXPECT_EQ(dot % 3, 0u);
  }
}

TEST(Oracle, CommutatorCodimensionIsClassNumber) {
  const auto g = make_group(Family::SL, 2, RingKind::Witt, 2, 1, 1);
  const auto t = enumerate_group(g);
  const auto A = algebra_table(t, 2);
  EXPECT_EQ(commutator_space(A).rank(), 3u);  // 6 - #classes
  // T_1 for S_3 over F_2 has dimension 4: its perp is spanned by two class sums.
  const auto T1 = kuelshammer_space(A, commutator_space(A), 1);
  EXPECT_EQ(T1.rank(), 4u);
  EXPECT_EQ(perp(T1, A).rank(), 2u);
}

TEST(Oracle, RefusesLargeGroups) {
  const auto t = enumerate_group(make_group(Family::GL, 2, RingKind::Witt, 2, 1, 3));
  EXPECT_THROW(algebra_table(t, 2), CapExceeded);
}
