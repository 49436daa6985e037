#include <gtest/gtest.h>

#include <random>

#include "kkg/ring.hpp"
#include "kkg/ring_selftest.hpp"

using namespace kkg;

TEST(Ring, GaloisRingExamples) {
  auto Z25 = Ring::make(RingKind::Witt, 5, 1, 2);
  EXPECT_EQ(Z25->inv(Z25->from_int(7)), Z25->from_int(18));
  EXPECT_EQ(Z25->teichmuller(Z25->field().from_int(2)), Z25->from_int(7));
  auto d = Z25->witt_digits(Z25->from_int(12));
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0], Z25->field().from_int(2));
  EXPECT_EQ(d[1], Z25->field().from_int(1));
  auto Z27 = Ring::make(RingKind::Witt, 3, 1, 3);
  EXPECT_EQ(Z27->teichmuller(Z27->field().from_int(2)), Z27->from_int(26));
  EXPECT_EQ(Z27->valuation(Z27->from_int(18)), 2u);
  EXPECT_EQ(Z27->valuation(Z27->zero()), 3u);
  EXPECT_THROW(Z27->inv(Z27->from_int(3)), ArithmeticError);
}

TEST(Ring, GR42) {
  auto R = Ring::make(RingKind::Witt, 2, 2, 2);
  EXPECT_EQ(R->cardinality().value(), 16u);
  EXPECT_EQ(R->coeff_modulus(), 4u);
  // x^2 = -x - 1 in (Z/4)[x]/(x^2 + x + 1).
  const RElem x = R->gen_x();
  EXPECT_EQ(R->mul(x, x), R->neg(R->add(x, R->one())));
  const auto rep = ring_selftest(*R);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.characteristic, 4u);
}

TEST(Ring, TruncatedPolynomial) {
  auto R = Ring::make(RingKind::Poly, 3, 1, 3);
  const RElem t = R->uniformizer();
  EXPECT_EQ(R->render(t), "t");
  EXPECT_EQ(R->pow(t, 3), R->zero());
  EXPECT_NE(R->pow(t, 2), R->zero());
  const RElem u = R->parse("1 + 2t + t^2");
  EXPECT_EQ(R->render(u), "1 + 2*t + t^2");
  EXPECT_EQ(R->mul(u, R->inv(u)), R->one());
  EXPECT_EQ(R->valuation(R->parse("2t^2")), 2u);
  EXPECT_EQ(R->divide_exact(R->parse("2t^2"), t), R->parse("2t"));
  const auto rep = ring_selftest(*R);
  EXPECT_EQ(rep.characteristic, 3u);
}

TEST(Ring, ParseErrors) {
  auto R = Ring::make(RingKind::Poly, 5, 1, 2);
  try {
    R->parse("1 + x");
    FAIL() << "x accepted with f = 1";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 4u);
  }
  EXPECT_THROW(R->parse(""), ParseError);
  EXPECT_THROW(R->parse("(1 + t"), ParseError);
  auto W = Ring::make(RingKind::Witt, 5, 1, 2);
  EXPECT_THROW(W->parse("t"), ParseError);
  EXPECT_EQ(W->parse("-1"), W->from_int(24));
  EXPECT_EQ(W->parse("30"), W->from_int(5));
}

class RingProps : public ::testing::TestWithParam<std::tuple<RingKind, u64, unsigned, unsigned>> {};

TEST_P(RingProps, Invariants) {
  auto [kind, p, f, r] = GetParam();
  auto R = Ring::make(kind, p, f, r);
  std::mt19937_64 rng(7);
  auto rnd = [&] { return R->from_index(rng() % R->cardinality().value()); };
  for (int i = 0; i < 300; ++i) {
    const RElem a = rnd(), b = rnd();
    // Text and byte encodings round trip.
    EXPECT_EQ(R->parse(R->render(a)), a) << R->render(a);
    EXPECT_EQ(R->decode(R->encode(a)), a);
    EXPECT_EQ(R->index_of(a), R->index_of(R->from_index(R->index_of(a))));
    // Valuation is additive on products (capped at r).
    EXPECT_EQ(R->valuation(R->mul(a, b)), std::min(r, R->valuation(a) + R->valuation(b)));
    if (R->is_unit(a)) {
      EXPECT_EQ(R->mul(a, R->inv(a)), R->one());
    } else {
      EXPECT_EQ(R->pow(a, r), R->zero());
    }
    EXPECT_EQ(R->from_digits(R->witt_digits(a)), a);
    EXPECT_EQ(R->residue(R->teichmuller(R->residue(a))), R->residue(a));
    for (unsigned s = 1; s <= r; ++s) {
      auto S = R->truncated(s);
      EXPECT_EQ(R->reduce(R->mul(a, b), s), S->mul(R->reduce(a, s), R->reduce(b, s)));
    }
  }
  const auto rep = ring_selftest(*R);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.witness;
}

INSTANTIATE_TEST_SUITE_P(
    Small, RingProps,
    ::testing::Values(std::tuple{RingKind::Witt, u64{5}, 1u, 2u}, std::tuple{RingKind::Poly, u64{5}, 1u, 2u},
                      std::tuple{RingKind::Witt, u64{2}, 3u, 3u}, std::tuple{RingKind::Poly, u64{2}, 3u, 3u},
                      std::tuple{RingKind::Witt, u64{3}, 2u, 4u}, std::tuple{RingKind::Poly, u64{3}, 2u, 4u},
                      std::tuple{RingKind::Witt, u64{2}, 1u, 16u}, std::tuple{RingKind::Poly, u64{7}, 2u, 2u}));

TEST(Ring, EncodingIsVersioned) {
  auto R = Ring::make(RingKind::Witt, 3, 1, 3);
  auto bytes = R->encode(R->from_int(26));
  ASSERT_EQ(bytes.size(), 2u);
  EXPECT_EQ(bytes[0], kElemEncodingVersion);
  EXPECT_EQ(bytes[1], 26);
  bytes[0] = 9;
  EXPECT_THROW(R->decode(bytes), std::invalid_argument);
}
