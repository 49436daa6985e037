#pragma once

// Finite fields F_q = F_p[x]/(m) with m the least monic irreducible of degree f
// in the order of its integer code sum_{i<f} m_i p^i.

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kkg/errors.hpp"
#include "kkg/numtheory.hpp"

namespace kkg {

/// Upper bound on stored coefficients per ring element (r*f for the
/// polynomial kind, f for the Witt kind).
inline constexpr unsigned kMaxCoeffs = 16;
using Coeffs = std::array<u64, kMaxCoeffs>;

/// Element of F_q: coefficients of 1, x, ..., x^{f-1}; unused slots stay zero.
struct FqElem {
  Coeffs c{};
  bool is_zero() const {
    for (u64 v : c)
      if (v) return false;
    return true;
  }
  friend bool operator==(const FqElem&, const FqElem&) = default;
};

namespace detail {

// out = a*b mod (modulus, mod_poly) where mod_poly is monic of degree f and
// stored as f+1 coefficients. a, b, out hold f coefficients; out may alias.
inline void poly_mulmod(const u64* a, const u64* b, unsigned f, const u64* mod_poly, u64 modulus,
                        u64* out) {
  std::array<u64, 2 * kMaxCoeffs> t{};
  for (unsigned i = 0; i < f; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < f; ++j) {
      t[i + j] = addmod(t[i + j], mulmod(a[i], b[j], modulus), modulus);
    }
  }
  for (unsigned k = 2 * f - 1; k-- > f;) {
    const u64 lead = t[k];
    if (lead == 0) continue;
    for (unsigned j = 0; j < f; ++j) {
      t[k - f + j] = submod(t[k - f + j], mulmod(lead, mod_poly[j], modulus), modulus);
    }
    t[k] = 0;
  }
  for (unsigned i = 0; i < f; ++i) out[i] = t[i];
}

// Dense polynomials over Z/p, low degree first, no trailing zeros.
using ZpPoly = std::vector<u64>;

inline void trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ZpPoly poly_rem(ZpPoly a, const ZpPoly& b, u64 p) {
  trim(a);
  const u64 inv_lead = powmod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    const u64 coef = mulmod(a.back(), inv_lead, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] = submod(a[shift + j], mulmod(coef, b[j], p), p);
    }
    trim(a);
  }
  return a;
}

inline ZpPoly poly_gcd(ZpPoly a, ZpPoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ZpPoly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: monic m of degree f is irreducible iff gcd(m, x^{p^i} - x) = 1 for
// every 1 <= i <= f/2.
inline bool is_irreducible(const std::vector<u64>& m, u64 p) {
  const unsigned f = static_cast<unsigned>(m.size() - 1);
  if (f <= 1) return f == 1;
  Coeffs xpow{};
  xpow[1] = 1;
  for (unsigned i = 1; i <= f / 2; ++i) {
    // xpow <- xpow^p mod m
    Coeffs acc{};
    acc[0] = 1;
    Coeffs base = xpow;
    for (u64 e = p; e; e >>= 1) {
      if (e & 1) poly_mulmod(acc.data(), base.data(), f, m.data(), p, acc.data());
      poly_mulmod(base.data(), base.data(), f, m.data(), p, base.data());
    }
    xpow = acc;
    ZpPoly diff(xpow.begin(), xpow.begin() + f);
    diff[1] = submod(diff[1], 1, p);
    if (poly_gcd(m, diff, p).size() != 1) return false;
  }
  return true;
}

}  // namespace detail

/// F_q as F_p[x]/(m). Immutable after construction.
class FieldDesc {
 public:
  /// Field of order p^f with the least irreducible modulus.
  static FieldDesc make(u64 p, unsigned f) {
    if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (f < 1 || f > kMaxCoeffs) {
      throw std::invalid_argument("extension degree must lie in [1, " +
                                  std::to_string(kMaxCoeffs) + "]");
    }
    const u64 candidates = pow_or_throw(p, f);
    std::vector<u64> m(f + 1, 0);
    m[f] = 1;
    for (u64 code = 0; code < candidates; ++code) {
      u64 rest = code;
      for (unsigned i = 0; i < f; ++i) {
        m[i] = rest % p;
        rest /= p;
      }
      if (detail::is_irreducible(m, p)) return FieldDesc(p, f, m);
    }
    throw InternalError("no irreducible polynomial of degree " + std::to_string(f));
  }

  /// Explicit modulus; must be monic, irreducible, degree f.
  FieldDesc(u64 p, unsigned f, const std::vector<u64>& m) : p_(p), f_(f) {
    if (!is_prime(p)) throw std::invalid_argument("p is not prime");
    if (f < 1 || f > kMaxCoeffs || m.size() != f + 1 || m[f] != 1) {
      throw std::invalid_argument("modulus must be monic of degree f");
    }
    for (u64 c : m)
      if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (!detail::is_irreducible(m, p)) throw std::invalid_argument("modulus is reducible");
    std::copy(m.begin(), m.end(), m_.begin());
    auto q = checked_pow(p, f);
    if (!q) throw std::invalid_argument("q = p^f exceeds 64 bits");
    q_ = *q;
  }

  u64 p() const { return p_; }
  unsigned f() const { return f_; }
  u64 q() const { return q_; }
  /// Coefficients m_0..m_f.
  std::span<const u64> modulus() const { return {m_.data(), f_ + 1}; }

  FqElem zero() const { return {}; }
  FqElem one() const {
    FqElem e;
    e.c[0] = 1;
    return e;
  }
  /// Class of x; for f = 1 this is 0 because m = x.
  FqElem gen_x() const {
    FqElem e;
    if (f_ == 1) {
      e.c[0] = (p_ - m_[0]) % p_;
    } else {
      e.c[1] = 1;
    }
    return e;
  }
  FqElem from_int(long long k) const {
    FqElem e;
    long long r = k % static_cast<long long>(p_);
    e.c[0] = static_cast<u64>(r < 0 ? r + static_cast<long long>(p_) : r);
    return e;
  }

  FqElem add(const FqElem& a, const FqElem& b) const {
    FqElem out;
    for (unsigned i = 0; i < f_; ++i) out.c[i] = addmod(a.c[i], b.c[i], p_);
    return out;
  }
  FqElem sub(const FqElem& a, const FqElem& b) const {
    FqElem out;
    for (unsigned i = 0; i < f_; ++i) out.c[i] = submod(a.c[i], b.c[i], p_);
    return out;
  }
  FqElem neg(const FqElem& a) const { return sub(zero(), a); }
  FqElem mul(const FqElem& a, const FqElem& b) const {
    FqElem out;
    detail::poly_mulmod(a.c.data(), b.c.data(), f_, m_.data(), p_, out.c.data());
    return out;
  }
  FqElem pow(FqElem base, u64 e) const {
    FqElem acc = one();
    while (e) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }
  FqElem inv(const FqElem& a) const {
    if (a.is_zero()) throw ArithmeticError("inverse of zero in F_q");
    if (f_ == 1) {
      FqElem out;
      out.c[0] = invmod(a.c[0], p_);
      return out;
    }
    return pow(a, q_ - 2);
  }
  FqElem frobenius(const FqElem& a) const { return pow(a, p_); }

  /// Mixed-radix index in [0, q).
  u64 index_of(const FqElem& a) const {
    u64 idx = 0;
    for (unsigned i = f_; i-- > 0;) idx = idx * p_ + a.c[i];
    return idx;
  }
  FqElem from_index(u64 idx) const {
    FqElem e;
    for (unsigned i = 0; i < f_; ++i) {
      e.c[i] = idx % p_;
      idx /= p_;
    }
    return e;
  }

  /// Multiplicative order of a non-zero element.
  u64 order(const FqElem& a) const {
    if (a.is_zero()) throw ArithmeticError("order of zero in F_q");
    u64 ord = q_ - 1;
    for (auto [prime, mult] : factorize(q_ - 1)) {
      for (unsigned k = 0; k < mult && pow(a, ord / prime) == one(); ++k) ord /= prime;
    }
    return ord;
  }

  /// Least-index generator of F_q^x.
  FqElem primitive_element() const {
    for (u64 idx = 1; idx < q_; ++idx) {
      FqElem a = from_index(idx);
      if (order(a) == q_ - 1) return a;
    }
    throw InternalError("F_q^x has no generator");
  }

  friend bool operator==(const FieldDesc& a, const FieldDesc& b) {
    return a.p_ == b.p_ && a.f_ == b.f_ && a.m_ == b.m_;
  }

 private:
  u64 p_;
  unsigned f_;
  std::array<u64, kMaxCoeffs + 1> m_{};
  u64 q_ = 0;
};

}  // namespace kkg
