#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kkg/ring.hpp"

namespace kkg {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string witness;  // empty when passed
};

struct RingSelftestReport {
  RingKind kind{};
  u64 p = 0;
  unsigned f = 0;
  unsigned r = 0;
  u64 characteristic = 0;
  u64 cardinality = 0;
  u64 unit_count = 0;  // 0 when not counted exhaustively
  bool exhaustive = false;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Rings with at most this many elements are checked element by element.
inline constexpr u64 kExhaustiveRingSize = 10'000;

namespace detail {

/// k * a by double-and-add, using only ring addition.
inline RElem scalar_multiple(const Ring& R, RElem a, u64 k) {
  RElem acc = R.zero();
  while (k) {
    if (k & 1) acc = R.add(acc, a);
    a = R.add(a, a);
    k >>= 1;
  }
  return acc;
}

class Checker {
 public:
  explicit Checker(RingSelftestReport& rep) : rep_(rep) {}
  CheckResult& open(std::string name) {
    rep_.checks.push_back({std::move(name), true, {}});
    return rep_.checks.back();
  }
  static void fail(CheckResult& c, const std::string& witness) {
    if (c.passed) {
      c.passed = false;
      c.witness = witness;
    }
  }

 private:
  RingSelftestReport& rep_;
};

}  // namespace detail

/// Axiom and structure checks for one ring. Sampled checks draw `samples`
/// random elements from a generator seeded with `seed`; everything that
/// ranges over single elements is exhaustive when |O_r| <= 10^4.
inline RingSelftestReport ring_selftest(const Ring& R, unsigned samples = 200, u64 seed = 1) {
  RingSelftestReport rep;
  rep.kind = R.kind();
  rep.p = R.p();
  rep.f = R.f();
  rep.r = R.r();
  detail::Checker chk(rep);
  std::mt19937_64 rng(seed);

  const auto card = R.cardinality();
  rep.exhaustive = card && *card <= kExhaustiveRingSize;
  const u64 N = card.value_or(0);
  auto random_elem = [&] {
    RElem e;
    for (unsigned i = 0; i < R.width(); ++i) e.c[i] = rng() % R.coeff_modulus();
    return e;
  };
  auto show = [&](const RElem& a) { return R.render(a); };

  // Triples: exhaustive only when |O|^3 stays small.
  auto for_each_triple = [&](auto&& visit) {
    if (card && N <= 40) {
      for (u64 i = 0; i < N; ++i)
        for (u64 j = 0; j < N; ++j)
          for (u64 k = 0; k < N; ++k) visit(R.from_index(i), R.from_index(j), R.from_index(k));
    } else {
      for (unsigned s = 0; s < samples; ++s) {
        const RElem a = random_elem(), b = random_elem(), d = random_elem();
        visit(a, b, d);
      }
    }
  };
  auto triple = [&](const RElem& a, const RElem& b, const RElem& d) {
    return "(" + show(a) + ", " + show(b) + ", " + show(d) + ")";
  };

  {
    auto& c = chk.open("associativity");
    for_each_triple([&](const RElem& a, const RElem& b, const RElem& d) {
      if (R.mul(R.mul(a, b), d) != R.mul(a, R.mul(b, d)) || R.add(R.add(a, b), d) != R.add(a, R.add(b, d))) {
        detail::Checker::fail(c, triple(a, b, d));
      }
    });
  }
  {
    auto& c = chk.open("distributivity");
    for_each_triple([&](const RElem& a, const RElem& b, const RElem& d) {
      if (R.mul(a, R.add(b, d)) != R.add(R.mul(a, b), R.mul(a, d))) detail::Checker::fail(c, triple(a, b, d));
    });
  }
  {
    auto& c = chk.open("commutativity");
    for_each_triple([&](const RElem& a, const RElem& b, const RElem&) {
      if (R.mul(a, b) != R.mul(b, a)) detail::Checker::fail(c, "(" + show(a) + ", " + show(b) + ")");
    });
  }
  {
    // Additive order of 1 divides |O_r|, a power of p.
    auto& c = chk.open("characteristic");
    u64 order = 1;
    while (detail::scalar_multiple(R, R.one(), order) != R.zero()) {
      auto next = checked_mul(order, R.p());
      if (!next || order > pow_or_throw(R.p(), R.r())) {
        detail::Checker::fail(c, "additive order of 1 not found");
        break;
      }
      order = *next;
    }
    rep.characteristic = order;
    const u64 expected = R.kind() == RingKind::Witt ? pow_or_throw(R.p(), R.r()) : R.p();
    if (order != expected) {
      detail::Checker::fail(c, "characteristic " + std::to_string(order) + ", expected " +
                                   std::to_string(expected));
    }
  }
  {
    auto& c = chk.open("cardinality");
    auto expected = checked_pow(R.q(), R.r());
    if (!card || !expected || *card != *expected) {
      detail::Checker::fail(c, "coefficient space size differs from q^r");
    }
    rep.cardinality = card.value_or(0);
    if (rep.exhaustive) {
      for (u64 i = 0; i < N; ++i) {
        if (R.index_of(R.from_index(i)) != i) {
          detail::Checker::fail(c, "index round trip fails at " + std::to_string(i));
          break;
        }
      }
    }
  }
  {
    auto& c = chk.open("uniformizer nilpotency");
    const RElem pi = R.uniformizer();
    if (R.pow(pi, R.r()) != R.zero()) detail::Checker::fail(c, "pi^r != 0");
    if (R.r() > 1 && R.pow(pi, R.r() - 1) == R.zero()) detail::Checker::fail(c, "pi^(r-1) == 0");
    if (R.r() > 1 && R.valuation(pi) != 1) detail::Checker::fail(c, "valuation(pi) != 1");
  }
  if (R.kind() == RingKind::Witt) {
    auto& c = chk.open("mhat lifts m");
    auto m = R.field().modulus();
    auto mhat = R.mhat();
    for (unsigned i = 0; i <= R.f(); ++i)
      if (mhat[i] % R.p() != m[i]) detail::Checker::fail(c, "coefficient " + std::to_string(i));
    if (mhat[R.f()] != 1) detail::Checker::fail(c, "mhat not monic");
  }
  if (rep.exhaustive) {
    // Every element is either invertible or nilpotent in a local ring.
    auto& c = chk.open("unit group order");
    u64 units = 0;
    for (u64 i = 0; i < N; ++i) {
      const RElem a = R.from_index(i);
      if (R.is_unit(a)) {
        if (R.mul(a, R.inv(a)) != R.one()) detail::Checker::fail(c, "a*inv(a) != 1 for " + show(a));
        ++units;
      } else if (R.pow(a, R.r()) != R.zero()) {
        detail::Checker::fail(c, "non-unit that is not nilpotent: " + show(a));
      }
    }
    rep.unit_count = units;
    const u64 expected = pow_or_throw(R.q(), R.r() - 1) * (R.q() - 1);
    if (units != expected) {
      detail::Checker::fail(c, std::to_string(units) + " units, expected " + std::to_string(expected));
    }
  }
  {
    auto& c = chk.open("teichmuller");
    const auto& F = R.field();
    std::vector<FqElem> residues;
    if (F.q() <= kExhaustiveRingSize) {
      for (u64 i = 0; i < F.q(); ++i) residues.push_back(F.from_index(i));
    } else {
      for (unsigned s = 0; s < samples; ++s) residues.push_back(F.from_index(rng() % F.q()));
    }
    for (const auto& a : residues) {
      const RElem t = R.teichmuller(a);
      if (R.residue(t) != a) detail::Checker::fail(c, "residue(tau(a)) != a");
      if (R.kind() == RingKind::Witt && R.pow(t, F.q()) != t) {
        detail::Checker::fail(c, "tau(a)^q != tau(a) for " + show(t));
      }
    }
    for (unsigned s = 0; s < samples; ++s) {
      const FqElem a = residues[rng() % residues.size()];
      const FqElem b = residues[rng() % residues.size()];
      if (R.teichmuller(F.mul(a, b)) != R.mul(R.teichmuller(a), R.teichmuller(b))) {
        detail::Checker::fail(c, "tau not multiplicative");
      }
    }
  }
  {
    auto& c = chk.open("witt digits round trip");
    auto roundtrip = [&](const RElem& a) {
      auto d = R.witt_digits(a);
      if (R.from_digits(d) != a) detail::Checker::fail(c, show(a));
    };
    if (rep.exhaustive) {
      for (u64 i = 0; i < N; ++i) roundtrip(R.from_index(i));
    } else {
      for (unsigned s = 0; s < samples; ++s) roundtrip(random_elem());
    }
  }
  {
    auto& c = chk.open("reduction homomorphism");
    for (unsigned s = 1; s <= R.r(); ++s) {
      const RingPtr S = R.truncated(s);
      for (unsigned k = 0; k < samples; ++k) {
        const RElem a = random_elem(), b = random_elem();
        if (R.reduce(R.mul(a, b), s) != S->mul(R.reduce(a, s), R.reduce(b, s)) ||
            R.reduce(R.add(a, b), s) != S->add(R.reduce(a, s), R.reduce(b, s))) {
          detail::Checker::fail(c, "s = " + std::to_string(s) + ", (" + show(a) + ", " + show(b) + ")");
        }
      }
      if (R.reduce(R.one(), s) != S->one()) detail::Checker::fail(c, "reduce(1) != 1");
    }
  }
  if (R.kind() == RingKind::Witt && R.f() == 1) {
    auto& c = chk.open("integers mod p^r");
    const u64 M = R.coeff_modulus();
    auto check = [&](u64 i, u64 j) {
      const RElem a = R.from_index(i), b = R.from_index(j);
      if (R.index_of(R.add(a, b)) != (i + j) % M ||
          R.index_of(R.mul(a, b)) != static_cast<u64>((static_cast<u128>(i) * j) % M)) {
        detail::Checker::fail(c, "(" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    };
    if (M * M <= 200'000) {
      for (u64 i = 0; i < M; ++i)
        for (u64 j = 0; j < M; ++j) check(i, j);
    } else {
      for (unsigned s = 0; s < samples; ++s) check(rng() % M, rng() % M);
    }
  }
  return rep;
}

}  // namespace kkg
