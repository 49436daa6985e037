#pragma once

// GL_n / SL_n over truncated local rings: membership, element orders, the
// upper-unitriangular Sylow p-subgroup and p-exponents.

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kkg/errors.hpp"
#include "kkg/matrix.hpp"
#include "kkg/numtheory.hpp"

namespace kkg {

enum class Family { GL, SL };

inline const char* to_string(Family f) { return f == Family::GL ? "GL" : "SL"; }

struct GroupDesc {
  Family family = Family::GL;
  unsigned n = 1;
  RingPtr ring;

  u64 p() const { return ring->p(); }
  unsigned r() const { return ring->r(); }
  /// n^2 for GL, n^2 - 1 for SL.
  unsigned kernel_dim() const { return family == Family::GL ? n * n : n * n - 1; }

  std::string ring_name() const {
    const Ring& R = *ring;
    const std::string fq = "F_" + std::to_string(R.q());
    if (R.r() == 1) return fq;
    if (R.kind() == RingKind::Poly) return fq + "[t]/t^" + std::to_string(R.r());
    if (R.f() == 1) return "Z/" + std::to_string(R.coeff_modulus());
    return "W_" + std::to_string(R.r()) + "(" + fq + ")";
  }
  std::string name() const { return std::string(to_string(family)) + "_" + std::to_string(n) + "(" + ring_name() + ")"; }
};

inline GroupDesc make_group(Family family, unsigned n, RingKind kind, u64 p, unsigned f, unsigned r) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return GroupDesc{family, n, Ring::make(kind, p, f, r)};
}

inline bool is_member(const Mat& a, const GroupDesc& g) {
  if (a.n() != g.n || !(a.ring() == *g.ring)) return false;
  const RElem d = mat_det(a);
  return g.family == Family::GL ? g.ring->is_unit(d) : d == g.ring->one();
}

/// |G(F_q)|, or nullopt on overflow.
inline std::optional<u64> residue_group_order(Family family, unsigned n, u64 q) {
  u64 order = 1;
  auto qn = checked_pow(q, n);
  if (!qn) return std::nullopt;
  for (unsigned i = 0; i < n; ++i) {
    auto term = *qn - *checked_pow(q, i);
    auto next = checked_mul(order, term);
    if (!next) return std::nullopt;
    order = *next;
  }
  return family == Family::GL ? order : order / (q - 1);
}

/// |G(O_r)| = q^{(r-1)d} |G(F_q)|, or nullopt on overflow.
inline std::optional<u64> group_order(const GroupDesc& g) {
  auto base = residue_group_order(g.family, g.n, g.ring->q());
  auto kernel = checked_pow(g.ring->q(), static_cast<u64>(g.r() - 1) * g.kernel_dim());
  if (!base || !kernel) return std::nullopt;
  return checked_mul(*base, *kernel);
}

/// exp_p(G(F_q)): the least p^k >= n (order of a regular unipotent), 1 for n = 1.
inline u64 residue_p_exponent(const GroupDesc& g) {
  if (g.n == 1) return 1;
  return pow_or_throw(g.p(), ceil_log(g.n, g.p()));
}

using Factorization = std::map<u64, unsigned>;

/// A multiple of the exponent of G(O_r) in factored form:
/// p^{ceil(log_p n) + r - 1} * lcm_{1<=i<=n} (q^i - 1).
inline Factorization exponent_multiple(const GroupDesc& g) {
  Factorization m;
  const u64 q = g.ring->q();
  for (unsigned i = 1; i <= g.n; ++i) {
    auto qi = checked_pow(q, i);
    if (!qi) throw std::overflow_error("q^n exceeds 64 bits");
    for (auto [prime, e] : factorize(*qi - 1)) m[prime] = std::max(m[prime], e);
  }
  const unsigned pe = ceil_log(g.n, g.p()) + g.r() - 1;
  if (pe) m[g.p()] += pe;
  return m;
}

inline Mat pow_factored(Mat a, const Factorization& e) {
  for (auto [prime, mult] : e)
    for (unsigned k = 0; k < mult; ++k) a = mat_pow(a, prime);
  return a;
}

/// Least k >= 1 with a^k = I: start from a known multiple of the exponent
/// and strip prime factors while the power stays trivial.
inline u64 element_order(const Mat& a, const GroupDesc& g) {
  if (!is_member(a, g)) throw std::invalid_argument("matrix is not a member of " + g.name());
  Factorization order = exponent_multiple(g);
  if (!pow_factored(a, order).is_identity()) {
    throw InternalError("element order does not divide the exponent multiple");
  }
  for (auto& [prime, mult] : order) {
    while (mult > 0) {
      --mult;
      if (!pow_factored(a, order).is_identity()) {
        ++mult;
        break;
      }
    }
  }
  u64 value = 1;
  for (auto [prime, mult] : order) {
    auto part = checked_pow(prime, mult);
    auto next = part ? checked_mul(value, *part) : std::nullopt;
    if (!next) throw std::overflow_error("element order exceeds 64 bits");
    value = *next;
  }
  return value;
}

/// Order of an element already known to be a p-element.
inline u64 p_element_order(const Mat& a, u64 p, unsigned max_steps = 64) {
  Mat x = a;
  u64 order = 1;
  for (unsigned s = 0; s <= max_steps; ++s) {
    if (x.is_identity()) return order;
    x = mat_pow(x, p);
    order *= p;
  }
  throw InternalError("p-element order did not terminate");
}

// ---- Sylow p-subgroup -----------------------------------------------------

/// Enumeration cap for the exhaustive Sylow stream.
inline constexpr u64 kSylowCap = 20'000'000;

/// The preimage under reduction mod pi of the upper unitriangular subgroup
/// of G(F_q), indexed densely by [0, size()). Entries above the diagonal
/// range over O_r, entries on and below it over (target) + pi*O_r; for SL the
/// last diagonal entry is solved from det = 1.
class SylowStream {
 public:
  explicit SylowStream(GroupDesc g) : g_(std::move(g)) {
    const Ring& R = *g_.ring;
    if (!R.cardinality()) throw CapExceeded("ring too large to index");
    small_ = R.r() > 1 ? R.truncated(R.r() - 1) : nullptr;
    const u64 full = *R.cardinality();
    const u64 lower = small_ ? *small_->cardinality() : 1;
    u128 total = 1;
    for (unsigned i = 0; i < g_.n; ++i) {
      for (unsigned j = 0; j < g_.n; ++j) {
        if (g_.family == Family::SL && i == g_.n - 1 && j == g_.n - 1) continue;
        const u64 base = i < j ? full : lower;
        coords_.push_back({i, j, base});
        total *= base;
        if (total > UINT64_MAX) throw CapExceeded("Sylow subgroup too large to index");
      }
    }
    size_ = static_cast<u64>(total);
  }

  const GroupDesc& group() const { return g_; }
  u64 size() const { return size_; }

  /// q^{n(n-1)/2} q^{(r-1)d}.
  static std::optional<u64> expected_size(const GroupDesc& g) {
    return checked_pow(g.ring->q(), static_cast<u64>(g.n) * (g.n - 1) / 2 +
                                        static_cast<u64>(g.r() - 1) * g.kernel_dim());
  }

  Mat element(u64 index) const {
    const Ring& R = *g_.ring;
    Mat m(g_.ring, g_.n);
    for (const auto& c : coords_) {
      const u64 digit = index % c.base;
      index /= c.base;
      if (c.i < c.j) {
        m(c.i, c.j) = R.from_index(digit);
      } else {
        RElem v = small_ ? R.shift_up(small_->from_index(digit), 1) : R.zero();
        if (c.i == c.j) v = R.add(v, R.one());
        m(c.i, c.j) = v;
      }
    }
    if (g_.family == Family::SL) {
      const unsigned last = g_.n - 1;
      m(last, last) = R.zero();
      const RElem d0 = mat_det(m);
      m(last, last) = R.one();
      const RElem cofactor = R.sub(mat_det(m), d0);
      m(last, last) = R.mul(R.sub(R.one(), d0), R.inv(cofactor));
    }
    return m;
  }

 private:
  struct Coord {
    unsigned i, j;
    u64 base;
  };
  GroupDesc g_;
  RingPtr small_;
  std::vector<Coord> coords_;
  u64 size_ = 1;
};

// ---- p-exponent -------------------------------------------------------------

enum class ExponentMethod { Exhaustive, Sampled };

inline const char* to_string(ExponentMethod m) {
  return m == ExponentMethod::Exhaustive ? "exhaustive" : "sampled";
}

struct ExponentStrategy {
  ExponentMethod method = ExponentMethod::Exhaustive;
  u64 trials = 10'000;
  u64 seed = 1;
  unsigned threads = 1;
  u64 cap = kSylowCap;

  static ExponentStrategy exhaustive(unsigned threads = 1) { return {ExponentMethod::Exhaustive, 0, 1, threads}; }
  static ExponentStrategy sampled(u64 trials, u64 seed) { return {ExponentMethod::Sampled, trials, seed, 1}; }
};

struct ExponentBound {
  u64 value = 1;
  std::string derivation;
};

/// Best available a-priori upper bound on exp_p(G(O_r)):
///   lifting bound p^{r-1} exp_p(G(F_q)) for both kinds, and for the
///   polynomial kind exp_p(G(F_q)) p^{ceil(log_p r)} since
///   (I + tX)^{p^z} = I + t^{p^z} X^{p^z} in characteristic p.
inline ExponentBound p_exponent_upper_bound(const GroupDesc& g) {
  const u64 p = g.p();
  const u64 base = residue_p_exponent(g);
  if (g.family == Family::SL && g.n == 1) return {1, "SL_1 is trivial"};
  ExponentBound b{base * pow_or_throw(p, g.r() - 1),
                  "p^(r-1) * exp_p(G(F_q)) = " + std::to_string(pow_or_throw(p, g.r() - 1)) + " * " +
                      std::to_string(base)};
  if (g.ring->kind() == RingKind::Poly) {
    const unsigned z = ceil_log(g.r(), p);
    const u64 poly = base * pow_or_throw(p, z);
    if (poly < b.value) {
      b = {poly, "exp_p(G(F_q)) * p^ceil(log_p r) = " + std::to_string(base) + " * " +
                     std::to_string(pow_or_throw(p, z))};
    }
  }
  return b;
}

struct ExponentResult {
  u64 value = 1;
  ExponentMethod method = ExponentMethod::Exhaustive;
  Mat lower_witness;
  u64 witness_index = 0;
  u64 examined = 0;
  ExponentBound upper_bound;
};

namespace detail {

struct ChunkBest {
  u64 value = 0;
  u64 index = 0;
};

inline ChunkBest scan_sylow(const SylowStream& s, u64 lo, u64 hi) {
  ChunkBest best;
  const u64 p = s.group().p();
  for (u64 idx = lo; idx < hi; ++idx) {
    const u64 ord = p_element_order(s.element(idx), p);
    if (ord > best.value) best = {ord, idx};
  }
  return best;
}

}  // namespace detail

/// exp_p(G) as the largest element order in the Sylow subgroup (a p-group, so
/// its exponent is its maximal element order). Exhaustive mode visits every
/// element, split into `threads` contiguous chunks; the reported witness is
/// the least index attaining the maximum, so the result does not depend on
/// the split. Sampled mode draws `trials` seeded random indices.
inline ExponentResult p_exponent(const GroupDesc& g, const ExponentStrategy& strategy = {}) {
  SylowStream stream(g);
  if (auto expect = SylowStream::expected_size(g); !expect || *expect != stream.size()) {
    throw InternalError("Sylow stream size disagrees with q^{n(n-1)/2} q^{(r-1)d}");
  }
  ExponentResult res{1, strategy.method, Mat::identity(g.ring, g.n), 0, 0, p_exponent_upper_bound(g)};
  detail::ChunkBest best;
  if (strategy.method == ExponentMethod::Exhaustive) {
    if (stream.size() > strategy.cap) {
      throw CapExceeded("Sylow subgroup of " + g.name() + " has " + std::to_string(stream.size()) +
                        " elements, above the exhaustive cap " + std::to_string(strategy.cap));
    }
    const unsigned threads = std::max(1u, strategy.threads);
    const u64 chunk = (stream.size() + threads - 1) / threads;
    std::vector<std::future<detail::ChunkBest>> parts;
    for (u64 lo = 0; lo < stream.size(); lo += chunk) {
      const u64 hi = std::min(stream.size(), lo + chunk);
      parts.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                                 [&stream, lo, hi] { return detail::scan_sylow(stream, lo, hi); }));
    }
    for (auto& fut : parts) {
      const auto part = fut.get();
      if (part.value > best.value || (part.value == best.value && part.index < best.index)) best = part;
    }
    res.examined = stream.size();
  } else {
    std::mt19937_64 rng(strategy.seed);
    const u64 p = g.p();
    for (u64 t = 0; t < strategy.trials; ++t) {
      const u64 idx = rng() % stream.size();
      const u64 ord = p_element_order(stream.element(idx), p);
      if (ord > best.value) best = {ord, idx};
    }
    res.examined = strategy.trials;
  }
  res.value = std::max<u64>(best.value, 1);
  res.witness_index = best.index;
  res.lower_witness = stream.element(best.index);
  if (res.value > res.upper_bound.value) {
    throw InternalError("p-exponent " + std::to_string(res.value) + " exceeds proven bound " +
                        std::to_string(res.upper_bound.value));
  }
  return res;
}

}  // namespace kkg
