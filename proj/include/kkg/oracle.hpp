#pragma once

// Brute-force linear algebra in the group algebra A = F_p G of a small group:
// the commutator subspace [A, A], the Kuelshammer spaces
// T_n(A) = {x : x^{p^n} in [A, A]} and their perps under the symmetrising
// form (g, h) = [g h = 1]. Everything here works on the multiplication table
// and dense vectors over F_p; nothing uses conjugacy classes, so it checks
// the class-count formulas in groupalg independently.

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kkg/errors.hpp"
#include "kkg/groupalg.hpp"
#include "kkg/numtheory.hpp"

namespace kkg {

inline constexpr std::size_t kOracleCap = 300;

using FpVec = std::vector<std::uint32_t>;

/// Row-reduced basis of a subspace of F_p^dim.
struct Subspace {
  std::size_t dim = 0;
  u64 p = 2;
  std::vector<FpVec> basis;          // reduced echelon rows
  std::vector<std::size_t> pivots;   // pivot column of each row

  std::size_t rank() const { return basis.size(); }

  /// Reduce v against the basis; the remainder is zero iff v lies in the span.
  FpVec remainder(FpVec v) const {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const std::uint32_t c = v[pivots[k]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (basis[k][j]) v[j] = static_cast<std::uint32_t>(submod(v[j], mulmod(c, basis[k][j], p), p));
      }
    }
    return v;
  }

  bool contains(const FpVec& v) const {
    for (auto x : remainder(v))
      if (x) return false;
    return true;
  }

  bool contains(const Subspace& other) const {
    for (const auto& v : other.basis)
      if (!contains(v)) return false;
    return true;
  }
};

/// Reduced row echelon form of the span of `rows`.
inline Subspace row_space(std::vector<FpVec> rows, std::size_t dim, u64 p) {
  Subspace s;
  s.dim = dim;
  s.p = p;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const u64 inv = powmod(rows[rank][col], p - 2, p);
    for (auto& x : rows[rank]) x = static_cast<std::uint32_t>(mulmod(x, inv, p));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const u64 c = rows[i][col];
      for (std::size_t j = 0; j < dim; ++j) {
        if (rows[rank][j]) rows[i][j] = static_cast<std::uint32_t>(submod(rows[i][j], mulmod(c, rows[rank][j], p), p));
      }
    }
    s.pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  s.basis = std::move(rows);
  return s;
}

/// {x : <row, x> = 0 for every row}.
inline Subspace null_space(const std::vector<FpVec>& rows, std::size_t dim, u64 p) {
  const Subspace rref = row_space(rows, dim, p);
  std::vector<bool> is_pivot(dim, false);
  for (auto c : rref.pivots) is_pivot[c] = true;
  std::vector<FpVec> kernel;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    FpVec v(dim, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < rref.rank(); ++k) {
      v[rref.pivots[k]] = static_cast<std::uint32_t>((p - rref.basis[k][free]) % p);
    }
    kernel.push_back(std::move(v));
  }
  return row_space(std::move(kernel), dim, p);
}

/// Multiplication table of a group with identity at id 0, and the
/// coefficient prime of F_p G.
struct AlgebraTable {
  std::size_t dim = 0;
  u64 p = 2;
  std::vector<std::uint32_t> mult;  // mult[i*dim + j] = id of g_i g_j
  std::vector<std::uint32_t> inv;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mult[a * dim + b]; }

  std::uint32_t power(std::uint32_t g, u64 e) const {
    std::uint32_t acc = 0;
    while (e) {
      if (e & 1) acc = mul(acc, g);
      g = mul(g, g);
      e >>= 1;
    }
    return acc;
  }
};

inline AlgebraTable algebra_table(const ElementTable& t, u64 p, std::size_t cap = kOracleCap) {
  if (t.size() > cap) {
    throw CapExceeded("oracle needs |G| <= " + std::to_string(cap) + ", got " + std::to_string(t.size()));
  }
  if (!is_prime(p)) throw std::invalid_argument("algebra coefficient field needs a prime p");
  AlgebraTable A;
  A.dim = t.size();
  A.p = p;
  A.mult.resize(A.dim * A.dim);
  std::vector<Mat> elems;
  elems.reserve(A.dim);
  for (std::uint32_t i = 0; i < A.dim; ++i) elems.push_back(t.element(i));
  if (!elems[0].is_identity()) throw InternalError("element table does not start at the identity");
  A.inv.assign(A.dim, UINT32_MAX);
  for (std::uint32_t i = 0; i < A.dim; ++i) {
    for (std::uint32_t j = 0; j < A.dim; ++j) {
      const auto k = t.id_of(mat_mul(elems[i], elems[j]));
      A.mult[i * A.dim + j] = k;
      if (k == 0) A.inv[i] = j;
    }
  }
  return A;
}

/// Full associativity on |G| <= 64, otherwise `samples` random triples.
inline bool check_group_table(const AlgebraTable& A, std::size_t samples = 100'000, u64 seed = 1) {
  for (std::uint32_t i = 0; i < A.dim; ++i) {
    if (A.mul(0, i) != i || A.mul(i, 0) != i) return false;
    if (A.inv[i] == UINT32_MAX || A.mul(i, A.inv[i]) != 0 || A.mul(A.inv[i], i) != 0) return false;
  }
  auto assoc = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return A.mul(A.mul(a, b), c) == A.mul(a, A.mul(b, c));
  };
  const auto n = static_cast<std::uint32_t>(A.dim);
  if (A.dim <= 64) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c)
          if (!assoc(a, b, c)) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s)
    if (!assoc(rng() % n, rng() % n, rng() % n)) return false;
  return true;
}

inline FpVec algebra_mul(const AlgebraTable& A, const FpVec& x, const FpVec& y) {
  std::vector<u64> acc(A.dim, 0);
  for (std::uint32_t i = 0; i < A.dim; ++i) {
    if (!x[i]) continue;
    for (std::uint32_t j = 0; j < A.dim; ++j) {
      if (!y[j]) continue;
      auto& slot = acc[A.mul(i, j)];
      slot = (slot + static_cast<u64>(x[i]) * y[j]) % A.p;
    }
  }
  return FpVec(acc.begin(), acc.end());
}

inline FpVec algebra_pow(const AlgebraTable& A, FpVec x, u64 e) {
  FpVec acc(A.dim, 0);
  acc[0] = 1;
  while (e) {
    if (e & 1) acc = algebra_mul(A, acc, x);
    e >>= 1;
    if (e) x = algebra_mul(A, x, x);
  }
  return acc;
}

/// Span of e_{gh} - e_{hg} over all pairs (g, h). A difference e_a - e_b whose
/// endpoints are already linked by earlier differences lies in their span,
/// so only a spanning forest of the pairs is handed to elimination.
inline Subspace commutator_space(const AlgebraTable& A) {
  std::vector<std::uint32_t> parent(A.dim);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<FpVec> rows;
  for (std::uint32_t g = 0; g < A.dim; ++g) {
    for (std::uint32_t h = 0; h < A.dim; ++h) {
      const auto a = A.mul(g, h), b = A.mul(h, g);
      const auto ra = find(a), rb = find(b);
      if (ra == rb) continue;
      parent[ra] = rb;
      FpVec v(A.dim, 0);
      v[a] = 1;
      v[b] = static_cast<std::uint32_t>(A.p - 1);
      rows.push_back(std::move(v));
    }
  }
  return row_space(std::move(rows), A.dim, A.p);
}

/// T_n(A) as the kernel of x -> x^{p^n} mod [A, A], which is F_p-linear. Each
/// returned basis vector is re-checked by powering it in the algebra.
inline Subspace kuelshammer_space(const AlgebraTable& A, const Subspace& commutators, unsigned n) {
  const u64 e = pow_or_throw(A.p, n);
  // Column g of the map is the remainder of e_{g^{p^n}} modulo [A, A].
  std::vector<FpVec> cols(A.dim);
  for (std::uint32_t g = 0; g < A.dim; ++g) {
    FpVec v(A.dim, 0);
    v[A.power(g, e)] = 1;
    cols[g] = commutators.remainder(std::move(v));
  }
  std::vector<FpVec> rows(A.dim, FpVec(A.dim, 0));
  for (std::uint32_t g = 0; g < A.dim; ++g)
    for (std::uint32_t k = 0; k < A.dim; ++k) rows[k][g] = cols[g][k];
  Subspace T = null_space(rows, A.dim, A.p);
  for (const auto& x : T.basis) {
    if (!commutators.contains(algebra_pow(A, x, e))) {
      throw InternalError("Kuelshammer basis vector fails direct powering check");
    }
  }
  return T;
}

/// S^perp under (x, v) = sum_g x_g v_{g^{-1}}.
inline Subspace perp(const Subspace& S, const AlgebraTable& A) {
  std::vector<FpVec> rows;
  rows.reserve(S.rank());
  for (const auto& v : S.basis) {
    FpVec w(A.dim, 0);
    for (std::uint32_t g = 0; g < A.dim; ++g) w[g] = v[A.inv[g]];
    rows.push_back(std::move(w));
  }
  return null_space(rows, A.dim, A.p);
}

/// (x + y)^p - x^p - y^p lies in [A, A] for `trials` random pairs.
inline bool check_power_additivity(const AlgebraTable& A, const Subspace& commutators, unsigned trials = 100,
                                   u64 seed = 1) {
  std::mt19937_64 rng(seed);
  auto random_vec = [&] {
    FpVec v(A.dim);
    for (auto& x : v) x = static_cast<std::uint32_t>(rng() % A.p);
    return v;
  };
  for (unsigned t = 0; t < trials; ++t) {
    const FpVec x = random_vec(), y = random_vec();
    FpVec s(A.dim);
    for (std::size_t i = 0; i < A.dim; ++i) s[i] = static_cast<std::uint32_t>(addmod(x[i], y[i], A.p));
    FpVec d = algebra_pow(A, s, A.p);
    const FpVec xp = algebra_pow(A, x, A.p), yp = algebra_pow(A, y, A.p);
    for (std::size_t i = 0; i < A.dim; ++i) {
      d[i] = static_cast<std::uint32_t>(submod(submod(d[i], xp[i], A.p), yp[i], A.p));
    }
    if (!commutators.contains(d)) return false;
  }
  return true;
}

struct OracleProfile {
  std::vector<std::size_t> perp_dims;         // dim T_n(A)^perp from linear algebra
  std::vector<std::size_t> class_count_dims;  // from groupalg
  std::size_t commutator_dim = 0;
  std::size_t num_classes = 0;
  std::size_t p_regular_classes = 0;
  bool table_ok = false;
  bool commutator_codim_ok = false;
  bool space_chain_ok = true;   // T_n subset of T_{n+1}
  bool ideal_chain_ok = true;   // T_{n+1}^perp subset of T_n^perp
  bool nondegenerate_ok = true;
  bool additivity_ok = false;
  bool terminal_ok = false;
  std::optional<std::size_t> first_mismatch;

  bool passed() const {
    return table_ok && commutator_codim_ok && space_chain_ok && ideal_chain_ok && nondegenerate_ok &&
           additivity_ok && terminal_ok && !first_mismatch;
  }
};

/// Compares dim perp(T_n) with the class-count dimensions for n up to one
/// past stabilisation, and checks the surrounding chain properties.
inline OracleProfile oracle_profile(const AlgebraTable& A, const ElementTable& t, const ClassPartition& part) {
  OracleProfile out;
  const KuelshammerProfile prof = kuelshammer_profile(t, part, A.p);
  out.class_count_dims = prof.dims;
  out.num_classes = part.count();
  out.p_regular_classes = prof.p_regular_classes;
  out.table_ok = check_group_table(A);

  const Subspace comm = commutator_space(A);
  out.commutator_dim = comm.rank();
  out.commutator_codim_ok = comm.rank() + part.count() == A.dim;
  out.additivity_ok = check_power_additivity(A, comm);

  const unsigned levels = prof.stab_index + 2;
  std::optional<Subspace> prev_T, prev_perp;
  for (unsigned n = 0; n < levels; ++n) {
    Subspace T = kuelshammer_space(A, comm, n);
    Subspace P = perp(T, A);
    if (T.rank() + P.rank() != A.dim) out.nondegenerate_ok = false;
    if (n == 0 && !(T.contains(comm) && comm.contains(T))) out.space_chain_ok = false;
    if (prev_T && !T.contains(*prev_T)) out.space_chain_ok = false;
    if (prev_perp && !prev_perp->contains(P)) out.ideal_chain_ok = false;
    out.perp_dims.push_back(P.rank());
    const std::size_t expected = prof.dims[std::min<std::size_t>(n, prof.dims.size() - 1)];
    if (P.rank() != expected && !out.first_mismatch) out.first_mismatch = n;
    prev_T = std::move(T);
    prev_perp = std::move(P);
  }
  out.terminal_ok = out.perp_dims.back() == prof.p_regular_classes;
  return out;
}

}  // namespace kkg
