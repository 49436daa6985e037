#include <gtest/gtest.h>

#include <algorithm>

#include "kkg/groupalg.hpp"

using namespace kkg;

namespace {

struct ProfileCase {
  const char* label;
  Family fam;
  unsigned n;
  RingKind kind;
  u64 p;
  unsigned r;
  u64 prime;
  std::vector<std::size_t> dims;
  std::size_t classes;
  u64 exponent;
};

// Frozen reference values from tests/oracle/brute_force.py.
std::vector<ProfileCase> profile_cases() {
  return {
      {"C4", Family::GL, 1, RingKind::Witt, 5, 1, 2, {4, 2, 1}, 4, 4},
      {"S3_p3", Family::SL, 2, RingKind::Witt, 2, 1, 3, {3, 2}, 3, 3},
      {"S3_p2", Family::SL, 2, RingKind::Witt, 2, 1, 2, {3, 2}, 3, 2},
      {"SL2_Z4", Family::SL, 2, RingKind::Witt, 2, 2, 2, {10, 4, 2}, 10, 4},
      {"SL2_F2t2", Family::SL, 2, RingKind::Poly, 2, 2, 2, {10, 3, 2}, 10, 4},
      {"GL2_F3", Family::GL, 2, RingKind::Witt, 3, 1, 3, {8, 6}, 8, 3},
      {"GL2_Z4", Family::GL, 2, RingKind::Witt, 2, 2, 2, {14, 5, 2}, 14, 4},
      {"GL2_F2t2", Family::GL, 2, RingKind::Poly, 2, 2, 2, {14, 5, 2}, 14, 4},
      {"GL1_Z9", Family::GL, 1, RingKind::Witt, 3, 2, 3, {6, 2}, 6, 3},
      {"GL1_F3t2", Family::GL, 1, RingKind::Poly, 3, 2, 3, {6, 2}, 6, 3},
      {"GL1_Z27", Family::GL, 1, RingKind::Witt, 3, 3, 3, {18, 6, 2}, 18, 9},
      {"GL1_F3t3", Family::GL, 1, RingKind::Poly, 3, 3, 3, {18, 2}, 18, 3},
      {"SL2_Z8", Family::SL, 2, RingKind::Witt, 2, 3, 2, {30, 7, 3, 2}, 30, 8},
      {"SL2_F2t3", Family::SL, 2, RingKind::Poly, 2, 3, 2, {24, 7, 3, 2}, 24, 8},
  };
}

}  // namespace

class Profiles : public ::testing::TestWithParam<ProfileCase> {};

TEST_P(Profiles, MatchReference) {
  const auto& c = GetParam();
  const auto g = make_group(c.fam, c.n, c.kind, c.p, 1, c.r);
  const auto t = enumerate_group(g);
  EXPECT_EQ(t.size(), group_order(g).value());
  const auto part = conjugacy_classes(t);
  EXPECT_EQ(part.count(), c.classes);
  const auto prof = kuelshammer_profile(t, part, c.prime);
  EXPECT_EQ(prof.dims, c.dims);
  EXPECT_EQ(prof.stab_index + 1, c.dims.size());
  EXPECT_EQ(prof.reynolds_dim, c.dims.back());
  EXPECT_EQ(prof.reynolds_dim, prof.p_regular_classes);
  EXPECT_EQ(p_exponent_from_profile(prof), c.exponent);
  if (c.prime == c.p) EXPECT_EQ(p_exponent(g).value, c.exponent);
}

INSTANTIATE_TEST_SUITE_P(Reference, Profiles, ::testing::ValuesIn(profile_cases()),
                         [](const auto& info) { return std::string(info.param.label); });

TEST(Classes, PartitionInvariants) {
  const auto g = make_group(Family::SL, 2, RingKind::Witt, 2, 1, 2);
  const auto t = enumerate_group(g);
  const auto part = conjugacy_classes(t);
  std::vector<std::size_t> sizes(part.sizes.begin(), part.sizes.end());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 1, 3, 3, 6, 6, 6, 6, 8, 8}));
  for (std::uint32_t c = 0; c < part.count(); ++c) {
    const auto rep = part.reps[c];
    EXPECT_EQ(part.class_of[rep], c);
    for (std::uint32_t id = 0; id < rep; ++id) EXPECT_NE(part.class_of[id], c);  // least id
  }
  // Conjugates of each element stay in its class.
  for (std::uint32_t id = 0; id < t.size(); ++id) {
    for (std::uint32_t h = 0; h < t.size(); h += 5) {
      const Mat conj = mat_mul(mat_mul(t.element(h), t.element(id)), mat_inverse(t.element(h)));
      EXPECT_EQ(part.class_of[t.id_of(conj)], part.class_of[id]);
    }
  }
  EXPECT_TRUE(t.element(0).is_identity());
}

TEST(Classes, CyclicPowerMap) {
  // C_4 = F_5^*: squaring sends {1},{g},{g^2},{g^3} to {1},{g^2},{1},{g^2}.
  const auto g = make_group(Family::GL, 1, RingKind::Witt, 5, 1, 1);
  const auto t = enumerate_group(g);
  const auto part = conjugacy_classes(t);
  const auto sq = class_power_map(t, part, 2);
  for (std::uint32_t c = 0; c < part.count(); ++c) {
    const Mat x = t.element(part.reps[c]);
    EXPECT_EQ(part.reps[sq[c]], t.id_of(mat_mul(x, x)));
  }
  std::vector<std::uint32_t> image(sq.begin(), sq.end());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  EXPECT_EQ(image.size(), 2u);
}

TEST(Enumeration, CapAndDeterminism) {
  const auto g = make_group(Family::GL, 2, RingKind::Witt, 2, 1, 3);
  EXPECT_THROW(enumerate_group(g, 100), CapExceeded);
  const auto a = enumerate_group(g), b = enumerate_group(g);
  EXPECT_EQ(a.codes(), b.codes());
  const auto gens = generators(g);
  EXPECT_TRUE(std::is_sorted(gens.begin(), gens.end(), [](const Mat& x, const Mat& y) { return mat_code(x) < mat_code(y); }));
}

TEST(Regime, Clauses) {
  EXPECT_TRUE(theorem_regime(2, 5, 2).applies);
  EXPECT_FALSE(theorem_regime(2, 3, 2).applies);
  EXPECT_TRUE(theorem_regime(2, 3, 3).applies);
  EXPECT_FALSE(theorem_regime(2, 2, 3).applies);
  EXPECT_TRUE(theorem_regime(2, 2, 4).applies);
  EXPECT_FALSE(theorem_regime(3, 2, 4).applies);
  EXPECT_FALSE(theorem_regime(3, 2, 4).p_ge_n);
}

TEST(Compare, UnitGroupsOfLengthTwoAgree) {
  // GL_1 over Z/9 and F_3[t]/t^2: both unit groups are C_2 x C_3.
  const auto rep = compare_groups(make_group(Family::GL, 1, RingKind::Witt, 3, 1, 2),
                                  make_group(Family::GL, 1, RingKind::Poly, 3, 1, 2));
  EXPECT_EQ(rep.verdict, Verdict::NotDistinguished);
  EXPECT_TRUE(rep.reasons.empty());
}

TEST(Compare, UnitGroupsOfLengthThreeDiffer) {
  const auto rep = compare_groups(make_group(Family::GL, 1, RingKind::Witt, 3, 1, 3),
                                  make_group(Family::GL, 1, RingKind::Poly, 3, 1, 3));
  EXPECT_EQ(rep.verdict, Verdict::Distinguished);
  EXPECT_EQ(rep.a.profile_exponent, 9u);
  EXPECT_EQ(rep.b.profile_exponent, 3u);
}

TEST(Compare, SL2AtLengthFour) {
  const auto rep = compare_groups(make_group(Family::SL, 2, RingKind::Witt, 2, 1, 4),
                                  make_group(Family::SL, 2, RingKind::Poly, 2, 1, 4));
  EXPECT_EQ(rep.verdict, Verdict::Distinguished);
  EXPECT_TRUE(rep.regime.applies);
  EXPECT_EQ(rep.regime.clause, "r >= 4 and p >= 2");
  EXPECT_EQ(rep.a.sylow.value, 16u);
  EXPECT_EQ(rep.b.sylow.value, 8u);
}
