#pragma once

// Word-size integer helpers: modular products, primality, factorisation,
// overflow-checked powers and p-adic bookkeeping.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kkg {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  if (m <= (u64{1} << 32)) return (a * b) % m;
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

inline u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  if (s < a || s >= m) s -= m;
  return s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

inline u64 powmod(u64 base, u64 e, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

/// base^e, or nullopt on 64-bit overflow.
/// Inverse of a modulo m by the extended Euclidean algorithm; a must be a
/// unit mod m.
inline u64 invmod(u64 a, u64 m) {
  __int128 r0 = m, r1 = a % m, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const __int128 k = r0 / r1;
    r0 -= k * r1;
    std::swap(r0, r1);
    s0 -= k * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) throw std::domain_error("invmod: not a unit");
  if (s0 < 0) s0 += m;
  return static_cast<u64>(s0);
}

inline std::optional<u64> checked_pow(u64 base, u64 e) {
  u64 result = 1;
  for (u64 i = 0; i < e; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
    result *= base;
  }
  return result;
}

inline std::optional<u64> checked_mul(u64 a, u64 b) {
  u64 out;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

inline u64 pow_or_throw(u64 base, u64 e) {
  auto v = checked_pow(base, e);
  if (!v) throw std::overflow_error("integer power exceeds 64 bits");
  return *v;
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace detail {

inline u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto step = [&](u64 x) { return addmod(mulmod(x, x, n), c, n); };
    u64 x = 2, y = 2, d = 1;
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

inline void factor_into(u64 n, std::map<u64, unsigned>& out) {
  if (n == 1) return;
  for (u64 small = 2; small < 1000 && small * small <= n; ++small) {
    while (n % small == 0) {
      ++out[small];
      n /= small;
    }
  }
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace detail

/// Prime factorisation as prime -> multiplicity. factorize(1) is empty.
inline std::map<u64, unsigned> factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize(0)");
  std::map<u64, unsigned> out;
  detail::factor_into(n, out);
  return out;
}

/// Largest power of p dividing k.
inline u64 p_part(u64 k, u64 p) {
  u64 out = 1;
  while (k != 0 && k % p == 0) {
    k /= p;
    out *= p;
  }
  return out;
}

/// Least z >= 0 with p^z >= x.
inline unsigned ceil_log(u64 x, u64 p) {
  unsigned z = 0;
  u128 acc = 1;
  while (acc < x) {
    acc *= p;
    ++z;
  }
  return z;
}

}  // namespace kkg
