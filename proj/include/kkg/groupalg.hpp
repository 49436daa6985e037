#pragma once

// Full enumeration of G(O_r), conjugacy classes, class power maps and the
// Kuelshammer dimension profile of F_p G.
//
// For a finite group G, dim T_n(F_p G)^perp is the number of classes C with
// C^{p^-n} = {h : h^{p^n} in C} non-empty, i.e. the number of classes hit by
// the p^n-th power map. The profile records these counts until the image
// stabilises; the stabilised value is dim R(F_p G), the number of p-regular
// classes, and the stabilisation index n gives exp_p(G) = p^n.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kkg/errors.hpp"
#include "kkg/matgrp.hpp"

namespace kkg {

/// Default cap on |G| for full enumeration.
inline constexpr u64 kEnumerationCap = 500'000;

/// Generating set of G(O_r), sorted by matrix code:
///   transvections I + u E_ij (i != j) with u = x^j t^k (Poly) or x^j (Witt),
///   GL: diag(tau(zeta), 1, ...) and diag(1 + pi^i x^j, 1, ...) for the unit group,
///   SL: diag(tau(zeta), tau(zeta)^{-1}, 1, ...).
inline std::vector<Mat> generators(const GroupDesc& g) {
  const Ring& R = *g.ring;
  const unsigned f = R.f();
  std::vector<RElem> additive;  // spans (O_r, +)
  const unsigned t_levels = R.kind() == RingKind::Poly ? R.r() : 1;
  for (unsigned k = 0; k < t_levels; ++k) {
    for (unsigned j = 0; j < f; ++j) {
      RElem u;
      u.c[k * f + j] = 1;
      additive.push_back(u);
    }
  }
  std::vector<Mat> gens;
  for (unsigned i = 0; i < g.n; ++i)
    for (unsigned j = 0; j < g.n; ++j)
      if (i != j)
        for (const auto& u : additive) gens.push_back(Mat::elementary(g.ring, g.n, i, j, u));

  const RElem zeta = R.teichmuller(R.field().primitive_element());
  if (g.family == Family::GL) {
    gens.push_back(Mat::diagonal(g.ring, g.n, {zeta}));
    const RElem pi = R.uniformizer();
    for (unsigned i = 1; i < R.r(); ++i) {
      for (unsigned j = 0; j < f; ++j) {
        RElem xj;
        xj.c[j] = 1;
        gens.push_back(Mat::diagonal(g.ring, g.n, {R.add(R.one(), R.mul(R.pow(pi, i), xj))}));
      }
    }
  } else if (g.n >= 2) {
    gens.push_back(Mat::diagonal(g.ring, g.n, {zeta, R.inv(zeta)}));
  }
  std::erase_if(gens, [](const Mat& m) { return m.is_identity(); });
  std::sort(gens.begin(), gens.end(), [](const Mat& a, const Mat& b) { return mat_code(a) < mat_code(b); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

/// Dense indexing of a fully enumerated group. Element ids are positions in
/// `codes()`; the identity has id 0.
class ElementTable {
 public:
  ElementTable(GroupDesc g, std::vector<u64> codes) : g_(std::move(g)), codes_(std::move(codes)) {
    if (!mat_code_fits(*g_.ring, g_.n)) throw CapExceeded("matrix codes exceed 64 bits");
    index_.reserve(codes_.size());
    for (std::size_t i = 0; i < codes_.size(); ++i) {
      if (!index_.emplace(codes_[i], static_cast<std::uint32_t>(i)).second) {
        throw std::invalid_argument("duplicate element in table");
      }
    }
    gens_ = generators(g_);
    for (const auto& s : gens_) gen_inverses_.push_back(mat_inverse(s));
  }

  const GroupDesc& group() const { return g_; }
  std::size_t size() const { return codes_.size(); }
  const std::vector<u64>& codes() const { return codes_; }
  const std::vector<Mat>& gens() const { return gens_; }
  const std::vector<Mat>& gen_inverses() const { return gen_inverses_; }

  Mat element(std::uint32_t id) const { return mat_from_code(g_.ring, g_.n, codes_.at(id)); }

  std::optional<std::uint32_t> find(const Mat& m) const {
    auto it = index_.find(mat_code(m));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::uint32_t id_of(const Mat& m) const {
    auto id = find(m);
    if (!id) throw InternalError("matrix not in element table: " + render_matrix(m));
    return *id;
  }

  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const { return id_of(mat_mul(element(a), element(b))); }

 private:
  GroupDesc g_;
  std::vector<u64> codes_;
  std::unordered_map<u64, std::uint32_t> index_;
  std::vector<Mat> gens_;
  std::vector<Mat> gen_inverses_;
};

/// Breadth-first closure of the identity under right multiplication by the
/// sorted generators. The result must have exactly the closed-form order.
inline ElementTable enumerate_group(const GroupDesc& g, u64 cap = kEnumerationCap) {
  const auto expected = group_order(g);
  if (!expected || *expected > cap) {
    throw CapExceeded(g.name() + " has order " + (expected ? std::to_string(*expected) : "> 2^64") +
                      ", above the enumeration cap " + std::to_string(cap));
  }
  if (!mat_code_fits(*g.ring, g.n)) throw CapExceeded("matrix codes exceed 64 bits");
  const std::vector<Mat> gens = generators(g);
  std::vector<u64> codes{mat_code(Mat::identity(g.ring, g.n))};
  std::unordered_map<u64, std::uint32_t> seen;
  seen.reserve(*expected);
  seen.emplace(codes[0], 0);
  for (std::size_t head = 0; head < codes.size(); ++head) {
    const Mat x = mat_from_code(g.ring, g.n, codes[head]);
    for (const auto& s : gens) {
      const u64 c = mat_code(mat_mul(x, s));
      if (seen.emplace(c, static_cast<std::uint32_t>(codes.size())).second) {
        codes.push_back(c);
        if (codes.size() > *expected) break;
      }
    }
    if (codes.size() > *expected) break;
  }
  if (codes.size() != *expected) {
    throw InternalError("closure of generators of " + g.name() + " has " + std::to_string(codes.size()) +
                        " elements, expected " + std::to_string(*expected));
  }
  return ElementTable(g, std::move(codes));
}

struct ClassPartition {
  std::vector<std::uint32_t> class_of;  // element id -> class id
  std::vector<std::uint32_t> reps;      // least element id of each class
  std::vector<u64> sizes;

  std::size_t count() const { return reps.size(); }

  /// Rebuild reps and sizes from class_of, with classes numbered by least member.
  static ClassPartition from_class_of(std::vector<std::uint32_t> class_of, std::size_t num_classes) {
    ClassPartition part;
    part.reps.assign(num_classes, UINT32_MAX);
    part.sizes.assign(num_classes, 0);
    for (std::uint32_t id = 0; id < class_of.size(); ++id) {
      const auto c = class_of[id];
      if (c >= num_classes) throw std::invalid_argument("class id out of range");
      part.reps[c] = std::min(part.reps[c], id);
      ++part.sizes[c];
    }
    for (auto r : part.reps)
      if (r == UINT32_MAX) throw std::invalid_argument("empty class");
    part.class_of = std::move(class_of);
    return part;
  }
};

/// Orbits of h -> s h s^{-1} over the generators s. Classes are numbered in
/// order of their least element id.
inline ClassPartition conjugacy_classes(const ElementTable& t) {
  constexpr std::uint32_t kUnset = UINT32_MAX;
  std::vector<std::uint32_t> class_of(t.size(), kUnset);
  std::uint32_t next = 0;
  std::vector<std::uint32_t> queue;
  for (std::uint32_t start = 0; start < t.size(); ++start) {
    if (class_of[start] != kUnset) continue;
    const std::uint32_t c = next++;
    class_of[start] = c;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Mat h = t.element(queue[head]);
      for (std::size_t k = 0; k < t.gens().size(); ++k) {
        const std::uint32_t y = t.id_of(mat_mul(mat_mul(t.gens()[k], h), t.gen_inverses()[k]));
        if (class_of[y] == kUnset) {
          class_of[y] = c;
          queue.push_back(y);
        }
      }
    }
  }
  return ClassPartition::from_class_of(std::move(class_of), next);
}

/// Class of g -> class of g^e. Well-definedness is checked on a second
/// member (the largest id) of every non-singleton class.
inline std::vector<std::uint32_t> class_power_map(const ElementTable& t, const ClassPartition& part, u64 e) {
  if (e == 0) throw std::invalid_argument("class_power_map: exponent must be >= 1");
  std::vector<std::uint32_t> second(part.count(), 0);
  for (std::uint32_t id = 0; id < t.size(); ++id) second[part.class_of[id]] = id;
  std::vector<std::uint32_t> image(part.count());
  for (std::uint32_t c = 0; c < part.count(); ++c) {
    image[c] = part.class_of[t.id_of(mat_pow(t.element(part.reps[c]), e))];
    if (second[c] != part.reps[c]) {
      const auto other = part.class_of[t.id_of(mat_pow(t.element(second[c]), e))];
      if (other != image[c]) throw InternalError("class power map depends on the representative");
    }
  }
  return image;
}

struct KuelshammerProfile {
  u64 p = 0;
  std::vector<std::size_t> dims;  // dims[n] = dim T_n(F_p G)^perp, n = 0..stab_index
  unsigned stab_index = 0;
  std::size_t reynolds_dim = 0;
  std::size_t p_regular_classes = 0;
};

/// Whether the element with id `id` has order prime to p.
inline bool is_p_regular(const ElementTable& t, std::uint32_t id, u64 p) {
  const auto order = group_order(t.group());
  u64 prime_to_p = *order;
  while (prime_to_p % p == 0) prime_to_p /= p;
  return mat_pow(t.element(id), prime_to_p).is_identity();
}

/// Counts of classes hit by the p^n-th power map for n = 0, 1, ... until two
/// consecutive image sets coincide.
inline KuelshammerProfile kuelshammer_profile(const ElementTable& t, const ClassPartition& part, u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("Kuelshammer profile needs a prime p");
  KuelshammerProfile prof;
  prof.p = p;
  std::vector<std::uint32_t> image(part.count());
  for (std::uint32_t c = 0; c < part.count(); ++c) image[c] = c;
  prof.dims.push_back(image.size());
  u64 pn = 1;
  for (unsigned n = 0;; ++n) {
    auto next_pn = checked_mul(pn, p);
    if (!next_pn) throw std::overflow_error("p^n exceeds 64 bits before stabilisation");
    pn = *next_pn;
    auto map = class_power_map(t, part, pn);
    std::vector<std::uint32_t> next(map.begin(), map.end());
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next == image) {
      prof.stab_index = n;
      break;
    }
    image = std::move(next);
    prof.dims.push_back(image.size());
  }
  prof.reynolds_dim = prof.dims.back();
  for (auto rep : part.reps)
    if (is_p_regular(t, rep, p)) ++prof.p_regular_classes;
  return prof;
}

/// p^{stab_index}: the p-exponent of G read off the profile.
inline u64 p_exponent_from_profile(const KuelshammerProfile& prof) {
  return pow_or_throw(prof.p, prof.stab_index);
}

// ---- comparison --------------------------------------------------------

/// Parameter regimes in which the two group algebras are known to be
/// inequivalent (all require p >= n).
struct Regime {
  bool p_ge_n = false;
  bool applies = false;
  std::string clause = "none";
};

inline Regime theorem_regime(unsigned n, u64 p, unsigned r) {
  Regime reg;
  reg.p_ge_n = p >= n;
  if (!reg.p_ge_n) return reg;
  if (r == 2 && p >= 2ull * n) {
    reg.clause = "r = 2 and p >= 2n";
  } else if (r == 3 && p >= 3) {
    reg.clause = "r = 3 and p >= 3";
  } else if (r >= 4 && p >= 2) {
    reg.clause = "r >= 4 and p >= 2";
  } else {
    return reg;
  }
  reg.applies = true;
  return reg;
}

struct GroupSummary {
  GroupDesc group;
  u64 order = 0;
  std::size_t num_classes = 0;
  ExponentResult sylow;
  KuelshammerProfile profile;
  u64 profile_exponent = 0;
};

enum class Verdict { Distinguished, NotDistinguished };

inline const char* to_string(Verdict v) {
  return v == Verdict::Distinguished ? "DISTINGUISHED" : "NOT DISTINGUISHED BY THESE INVARIANTS";
}

struct ComparisonReport {
  GroupSummary a;
  GroupSummary b;
  Verdict verdict = Verdict::NotDistinguished;
  std::vector<std::string> reasons;
  Regime regime;
};

inline GroupSummary summarize_group(const ElementTable& t, const ClassPartition& part,
                                    const ExponentStrategy& strategy = {}) {
  const GroupDesc& g = t.group();
  ExponentStrategy strat = strategy;
  if (strat.method == ExponentMethod::Exhaustive) {
    if (auto sz = SylowStream::expected_size(g); !sz || *sz > strat.cap) strat.method = ExponentMethod::Sampled;
  }
  GroupSummary s{g, t.size(), part.count(), p_exponent(g, strat), kuelshammer_profile(t, part, g.p()), 0};
  s.profile_exponent = p_exponent_from_profile(s.profile);
  return s;
}

inline ComparisonReport compare_summaries(GroupSummary a, GroupSummary b) {
  ComparisonReport rep{std::move(a), std::move(b), Verdict::NotDistinguished, {}, {}};
  const auto& ga = rep.a.group;
  if (rep.a.profile_exponent != rep.b.profile_exponent) {
    rep.reasons.push_back("p-exponents differ: " + std::to_string(rep.a.profile_exponent) + " vs " +
                          std::to_string(rep.b.profile_exponent));
  }
  const auto& da = rep.a.profile.dims;
  const auto& db = rep.b.profile.dims;
  for (std::size_t n = 0; n < std::max(da.size(), db.size()); ++n) {
    const auto x = n < da.size() ? da[n] : da.back();
    const auto y = n < db.size() ? db[n] : db.back();
    if (x != y) {
      rep.reasons.push_back("Kuelshammer dimensions differ at n = " + std::to_string(n) + ": " +
                            std::to_string(x) + " vs " + std::to_string(y));
      break;
    }
  }
  if (!rep.reasons.empty()) rep.verdict = Verdict::Distinguished;
  rep.regime = theorem_regime(ga.n, ga.p(), ga.r());
  return rep;
}

/// Computes both groups' invariants from scratch.
inline ComparisonReport compare_groups(const GroupDesc& a, const GroupDesc& b, u64 cap = kEnumerationCap,
                                       const ExponentStrategy& strategy = {}) {
  auto summarize = [&](const GroupDesc& g) {
    const ElementTable t = enumerate_group(g, cap);
    return summarize_group(t, conjugacy_classes(t), strategy);
  };
  return compare_summaries(summarize(a), summarize(b));
}

}  // namespace kkg
