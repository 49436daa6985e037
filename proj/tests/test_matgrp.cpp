#include <gtest/gtest.h>

#include "kkg/matgrp.hpp"

using namespace kkg;

TEST(MatGroup, Orders) {
  EXPECT_EQ(group_order(make_group(Family::GL, 2, RingKind::Witt, 3, 1, 1)).value(), 48u);
  EXPECT_EQ(group_order(make_group(Family::SL, 2, RingKind::Witt, 2, 1, 2)).value(), 48u);
  EXPECT_EQ(group_order(make_group(Family::GL, 2, RingKind::Poly, 3, 1, 3)).value(), 314928u);
  EXPECT_EQ(group_order(make_group(Family::SL, 2, RingKind::Poly, 2, 1, 4)).value(), 3072u);
  EXPECT_EQ(group_order(make_group(Family::GL, 1, RingKind::Witt, 3, 1, 3)).value(), 18u);
}

TEST(MatGroup, RemarkMatrixOrder) {
  auto g = make_group(Family::GL, 3, RingKind::Poly, 5, 1, 2);
  const Mat m = parse_matrix(g.ring, "1,1,0;t,1,1;t,0,1");
  ASSERT_TRUE(is_member(m, g));
  EXPECT_EQ(element_order(m, g), 25u);
  EXPECT_FALSE(mat_pow(m, 5).is_identity());
  EXPECT_TRUE(mat_pow(m, 25).is_identity());
}

TEST(MatGroup, ElementOrderAgreesWithPowers) {
  auto g = make_group(Family::GL, 2, RingKind::Witt, 3, 1, 2);
  const Mat m = parse_matrix(g.ring, "1,1;0,1");
  EXPECT_EQ(element_order(m, g), 9u);
  const Mat d = parse_matrix(g.ring, "8,0;0,1");  // -1
  EXPECT_EQ(element_order(d, g), 2u);
  const Mat nonunit = parse_matrix(g.ring, "3,0;0,1");
  EXPECT_FALSE(is_member(nonunit, g));
  EXPECT_FALSE(is_member(parse_matrix(g.ring, "2,0;0,1"), make_group(Family::SL, 2, RingKind::Witt, 3, 1, 2)));
}

TEST(MatGroup, SylowStreamSizes) {
  for (auto fam : {Family::GL, Family::SL}) {
    for (auto kind : {RingKind::Poly, RingKind::Witt}) {
      auto g = make_group(fam, 2, kind, 3, 1, 2);
      SylowStream s(g);
      EXPECT_EQ(s.size(), SylowStream::expected_size(g).value());
      EXPECT_EQ(s.size(), p_part(group_order(g).value(), 3));
      // Distinct members of G reducing to unitriangular residues.
      std::set<u64> seen;
      for (u64 i = 0; i < s.size(); ++i) {
        const Mat m = s.element(i);
        ASSERT_TRUE(is_member(m, g));
        seen.insert(mat_code(m));
      }
      EXPECT_EQ(seen.size(), s.size());
    }
  }
}

struct ExpCase {
  Family fam;
  unsigned n;
  RingKind kind;
  u64 p;
  unsigned r;
  u64 expected;
};

class ExponentCases : public ::testing::TestWithParam<ExpCase> {};

// Reference values from an independent brute-force enumeration.
TEST_P(ExponentCases, MatchesBruteForce) {
  const auto c = GetParam();
  auto g = make_group(c.fam, c.n, c.kind, c.p, 1, c.r);
  const auto res = p_exponent(g);
  EXPECT_EQ(res.value, c.expected) << g.name();
  EXPECT_LE(res.value, res.upper_bound.value);
  EXPECT_EQ(p_element_order(res.lower_witness, c.p), res.value);
}

INSTANTIATE_TEST_SUITE_P(
    BruteForce, ExponentCases,
    ::testing::Values(ExpCase{Family::SL, 2, RingKind::Witt, 2, 4, 16}, ExpCase{Family::SL, 2, RingKind::Poly, 2, 4, 8},
                      ExpCase{Family::GL, 2, RingKind::Witt, 3, 3, 27}, ExpCase{Family::GL, 2, RingKind::Poly, 3, 3, 9},
                      ExpCase{Family::GL, 2, RingKind::Witt, 2, 3, 8}, ExpCase{Family::GL, 2, RingKind::Poly, 2, 3, 8},
                      ExpCase{Family::GL, 2, RingKind::Witt, 3, 2, 9}, ExpCase{Family::GL, 2, RingKind::Poly, 3, 2, 9},
                      ExpCase{Family::SL, 2, RingKind::Witt, 2, 2, 4}, ExpCase{Family::SL, 2, RingKind::Poly, 2, 2, 4},
                      ExpCase{Family::GL, 1, RingKind::Witt, 3, 3, 9}, ExpCase{Family::GL, 1, RingKind::Poly, 3, 3, 3}));

TEST(Exponent, ChunkingDoesNotChangeResult) {
  auto g = make_group(Family::GL, 2, RingKind::Witt, 3, 1, 3);
  const auto one = p_exponent(g, ExponentStrategy::exhaustive(1));
  for (unsigned threads : {2u, 3u, 7u}) {
    const auto many = p_exponent(g, ExponentStrategy::exhaustive(threads));
    EXPECT_EQ(many.value, one.value);
    EXPECT_EQ(many.witness_index, one.witness_index);
    EXPECT_EQ(many.lower_witness, one.lower_witness);
  }
}

TEST(Exponent, SampledIsSeededAndBounded) {
  auto g = make_group(Family::GL, 2, RingKind::Witt, 5, 1, 2);
  const auto a = p_exponent(g, ExponentStrategy::sampled(500, 42));
  const auto b = p_exponent(g, ExponentStrategy::sampled(500, 42));
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.lower_witness, b.lower_witness);
  EXPECT_LE(a.value, 25u);
  EXPECT_EQ(a.upper_bound.value, 25u);
  EXPECT_EQ(a.method, ExponentMethod::Sampled);
}

TEST(Exponent, CapIsEnforced) {
  auto g = make_group(Family::GL, 2, RingKind::Witt, 3, 1, 3);
  ExponentStrategy s = ExponentStrategy::exhaustive();
  s.cap = 100;
  EXPECT_THROW(p_exponent(g, s), CapExceeded);
}

TEST(Exponent, UpperBounds) {
  EXPECT_EQ(p_exponent_upper_bound(make_group(Family::SL, 2, RingKind::Poly, 2, 1, 4)).value, 8u);
  EXPECT_EQ(p_exponent_upper_bound(make_group(Family::SL, 2, RingKind::Witt, 2, 1, 4)).value, 16u);
  EXPECT_EQ(p_exponent_upper_bound(make_group(Family::GL, 2, RingKind::Poly, 3, 1, 3)).value, 9u);
}
