#pragma once

// Closed forms for powers of g = A(I + pi X) over O_2 with A upper
// unitriangular, and the binomial sums that make the first-order term vanish.

#include <cstdint>
#include <random>
#include <stdexcept>

#include "kkg/matrix.hpp"
#include "kkg/numtheory.hpp"

namespace kkg {

/// Exact binomial coefficient; throws on 128-bit overflow.
inline u128 binomial(u64 n, u64 k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 acc = 1;
  for (u64 i = 1; i <= k; ++i) {
    // acc * (n - k + i) / i stays integral at every step.
    const u128 factor = n - k + i;
    if (acc > static_cast<u128>(-1) / factor) throw std::overflow_error("binomial overflow");
    acc = acc * factor / i;
  }
  return acc;
}

/// sum_{i=0}^{p-1} C(p-i, k) C(i, l), exact.
inline u128 chu_sum_exact(u64 p, u64 k, u64 l) {
  u128 total = 0;
  for (u64 i = 0; i < p; ++i) {
    const u128 a = binomial(p - i, k);
    const u128 b = binomial(i, l);
    if (a != 0 && b > static_cast<u128>(-1) / a) throw std::overflow_error("chu_sum overflow");
    total += a * b;
  }
  return total;
}

/// chu_sum_exact(p, k, l) mod p.
inline u64 chu_sum(u64 p, u64 k, u64 l) { return static_cast<u64>(chu_sum_exact(p, k, l) % p); }

/// A^m + pi * sum_{i=0}^{m-1} A^{m-i} X A^i over a ring with r = 2.
inline Mat unitriangular_power(const Mat& A, const Mat& X, std::uint64_t m) {
  const Ring& R = A.ring();
  if (R.r() != 2) throw std::invalid_argument("unitriangular_power requires r = 2");
  const unsigned n = A.n();
  for (unsigned i = 0; i < n; ++i) {
    if (A(i, i) != R.one()) throw std::invalid_argument("A must have unit diagonal");
    for (unsigned j = 0; j < i; ++j)
      if (!R.is_zero(A(i, j))) throw std::invalid_argument("A must be upper triangular");
  }
  if (m == 0) return Mat::identity(A.ring_ptr(), n);
  Mat sum(A.ring_ptr(), n);
  Mat left = mat_pow(A, m);                       // A^{m-i}
  Mat right = Mat::identity(A.ring_ptr(), n);     // A^i
  const Mat A_inv = mat_inverse(A);
  for (std::uint64_t i = 0; i < m; ++i) {
    sum = mat_add(sum, mat_mul(mat_mul(left, X), right));
    left = mat_mul(left, A_inv);
    right = mat_mul(right, A);
  }
  return mat_add(mat_pow(A, m), mat_scale(R.uniformizer(), sum));
}

/// B = sum_{i=0}^{p-1} A^{p-i} X A^i.
inline Mat b_matrix(const Mat& A, const Mat& X, std::uint64_t p) {
  const unsigned n = A.n();
  std::vector<Mat> powers{Mat::identity(A.ring_ptr(), n)};
  for (std::uint64_t k = 1; k <= p; ++k) powers.push_back(mat_mul(powers.back(), A));
  Mat B(A.ring_ptr(), n);
  for (std::uint64_t i = 0; i < p; ++i) B = mat_add(B, mat_mul(mat_mul(powers[p - i], X), powers[i]));
  return B;
}

inline RElem random_element(const Ring& R, std::mt19937_64& rng) {
  RElem e;
  for (unsigned i = 0; i < R.width(); ++i) e.c[i] = rng() % R.coeff_modulus();
  return e;
}

inline Mat random_matrix(const RingPtr& ring, unsigned n, std::mt19937_64& rng) {
  Mat m(ring, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) m(i, j) = random_element(*ring, rng);
  return m;
}

/// Upper triangular with ones on the diagonal and random entries above it.
inline Mat random_unitriangular(const RingPtr& ring, unsigned n, std::mt19937_64& rng) {
  Mat m = Mat::identity(ring, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) m(i, j) = random_element(*ring, rng);
  return m;
}

}  // namespace kkg
