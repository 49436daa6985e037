#pragma once

// Square matrices over a truncated local ring.
//
// Matrix literal grammar (CLI input):
//   matrix := row (';' row)*
//   row    := entry (',' entry)*
//   entry  := ring-element literal, see Ring::parse
// e.g. "1,1,0;t,1,1;t,0,1". Parse errors carry the byte offset in the
// full matrix string.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kkg/errors.hpp"
#include "kkg/ring.hpp"

namespace kkg {

class Mat {
 public:
  Mat(RingPtr ring, unsigned n) : ring_(std::move(ring)), n_(n), e_(static_cast<std::size_t>(n) * n) {
    if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  }

  static Mat identity(RingPtr ring, unsigned n) {
    Mat m(std::move(ring), n);
    for (unsigned i = 0; i < n; ++i) m(i, i) = m.ring().one();
    return m;
  }

  /// I + u * E_ij.
  static Mat elementary(RingPtr ring, unsigned n, unsigned i, unsigned j, const RElem& u) {
    Mat m = identity(std::move(ring), n);
    m(i, j) = m.ring().add(m(i, j), u);
    return m;
  }

  /// diag(d_0, ..., d_{k-1}, 1, ..., 1).
  static Mat diagonal(RingPtr ring, unsigned n, const std::vector<RElem>& d) {
    Mat m = identity(std::move(ring), n);
    for (std::size_t i = 0; i < d.size() && i < n; ++i) m(i, i) = d[i];
    return m;
  }

  unsigned n() const { return n_; }
  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }

  RElem& operator()(unsigned i, unsigned j) { return e_[i * n_ + j]; }
  const RElem& operator()(unsigned i, unsigned j) const { return e_[i * n_ + j]; }
  std::span<const RElem> entries() const { return e_; }

  bool is_identity() const {
    for (unsigned i = 0; i < n_; ++i)
      for (unsigned j = 0; j < n_; ++j)
        if ((*this)(i, j) != (i == j ? ring_->one() : ring_->zero())) return false;
    return true;
  }

  friend bool operator==(const Mat& a, const Mat& b) { return a.n_ == b.n_ && a.e_ == b.e_; }

 private:
  RingPtr ring_;
  unsigned n_;
  std::vector<RElem> e_;
};

namespace detail {
inline void require_compatible(const Mat& a, const Mat& b) {
  if (a.n() != b.n()) throw std::invalid_argument("matrix dimension mismatch");
  if (a.ring_ptr() != b.ring_ptr() && !(a.ring() == b.ring())) {
    throw std::invalid_argument("matrices over different rings");
  }
}
}  // namespace detail

inline Mat mat_add(const Mat& a, const Mat& b) {
  detail::require_compatible(a, b);
  Mat c(a.ring_ptr(), a.n());
  for (unsigned i = 0; i < a.n(); ++i)
    for (unsigned j = 0; j < a.n(); ++j) c(i, j) = a.ring().add(a(i, j), b(i, j));
  return c;
}

inline Mat mat_sub(const Mat& a, const Mat& b) {
  detail::require_compatible(a, b);
  Mat c(a.ring_ptr(), a.n());
  for (unsigned i = 0; i < a.n(); ++i)
    for (unsigned j = 0; j < a.n(); ++j) c(i, j) = a.ring().sub(a(i, j), b(i, j));
  return c;
}

inline Mat mat_scale(const RElem& s, const Mat& a) {
  Mat c(a.ring_ptr(), a.n());
  for (unsigned i = 0; i < a.n(); ++i)
    for (unsigned j = 0; j < a.n(); ++j) c(i, j) = a.ring().mul(s, a(i, j));
  return c;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  detail::require_compatible(a, b);
  const Ring& R = a.ring();
  const unsigned n = a.n();
  Mat c(a.ring_ptr(), n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned k = 0; k < n; ++k) {
      const RElem& aik = a(i, k);
      if (R.is_zero(aik)) continue;
      for (unsigned j = 0; j < n; ++j) c(i, j) = R.add(c(i, j), R.mul(aik, b(k, j)));
    }
  }
  return c;
}

/// Binary powering; mat_pow(a, 0) = I.
inline Mat mat_pow(Mat base, std::uint64_t e) {
  Mat acc = Mat::identity(base.ring_ptr(), base.n());
  while (e) {
    if (e & 1) acc = mat_mul(acc, base);
    e >>= 1;
    if (e) base = mat_mul(base, base);
  }
  return acc;
}

/// Determinant by the Leibniz expansion over all permutations.
inline RElem det_leibniz(const Mat& a) {
  const Ring& R = a.ring();
  const unsigned n = a.n();
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  RElem total = R.zero();
  do {
    unsigned inversions = 0;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    RElem term = R.one();
    for (unsigned i = 0; i < n; ++i) term = R.mul(term, a(i, perm[i]));
    total = inversions % 2 ? R.sub(total, term) : R.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Determinant by elimination. The pivot of each column is an entry of least
/// valuation; in a chain ring it divides every other entry of the column,
/// so each step is exact.
inline RElem det_elimination(Mat a) {
  const Ring& R = a.ring();
  const unsigned n = a.n();
  RElem det = R.one();
  for (unsigned col = 0; col < n; ++col) {
    unsigned best = col;
    unsigned best_val = R.valuation(a(col, col));
    for (unsigned row = col + 1; row < n && best_val > 0; ++row) {
      const unsigned v = R.valuation(a(row, col));
      if (v < best_val) {
        best = row;
        best_val = v;
      }
    }
    if (best_val == R.r()) return R.zero();
    if (best != col) {
      for (unsigned j = 0; j < n; ++j) std::swap(a(col, j), a(best, j));
      det = R.neg(det);
    }
    const RElem pivot = a(col, col);
    det = R.mul(det, pivot);
    for (unsigned row = col + 1; row < n; ++row) {
      if (R.is_zero(a(row, col))) continue;
      const RElem factor = R.divide_exact(a(row, col), pivot);
      for (unsigned j = col; j < n; ++j) a(row, j) = R.sub(a(row, j), R.mul(factor, a(col, j)));
    }
  }
  return det;
}

inline RElem mat_det(const Mat& a) { return a.n() <= 4 ? det_leibniz(a) : det_elimination(a); }

/// Entry-wise image in O_s.
inline Mat mat_reduce(const Mat& a, unsigned s) {
  RingPtr target = a.ring().truncated(s);
  Mat out(target, a.n());
  for (unsigned i = 0; i < a.n(); ++i)
    for (unsigned j = 0; j < a.n(); ++j) out(i, j) = a.ring().reduce(a(i, j), s);
  return out;
}

/// Coefficient-wise lift of a matrix over O_s into `ring` (O_r, r >= s).
inline Mat mat_lift(const Mat& a, RingPtr ring) {
  Mat out(std::move(ring), a.n());
  for (unsigned i = 0; i < a.n(); ++i)
    for (unsigned j = 0; j < a.n(); ++j) out(i, j) = a(i, j);
  return out;
}

namespace detail {

// Gauss-Jordan over a field (here O_1 = F_q).
inline Mat gauss_jordan_inverse(Mat a) {
  const Ring& R = a.ring();
  const unsigned n = a.n();
  Mat inv = Mat::identity(a.ring_ptr(), n);
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = col;
    while (pivot < n && R.is_zero(a(pivot, col))) ++pivot;
    if (pivot == n) throw ArithmeticError("matrix is not in GL_n(O_r): singular residue");
    if (pivot != col) {
      for (unsigned j = 0; j < n; ++j) {
        std::swap(a(col, j), a(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    }
    const RElem s = R.inv(a(col, col));
    for (unsigned j = 0; j < n; ++j) {
      a(col, j) = R.mul(s, a(col, j));
      inv(col, j) = R.mul(s, inv(col, j));
    }
    for (unsigned row = 0; row < n; ++row) {
      if (row == col || R.is_zero(a(row, col))) continue;
      const RElem factor = a(row, col);
      for (unsigned j = 0; j < n; ++j) {
        a(row, j) = R.sub(a(row, j), R.mul(factor, a(col, j)));
        inv(row, j) = R.sub(inv(row, j), R.mul(factor, inv(col, j)));
      }
    }
  }
  return inv;
}

}  // namespace detail

/// Two-sided inverse: invert the residue matrix over F_q, then lift with
/// Newton steps X <- X(2I - aX), each of which doubles the pi-adic precision.
inline Mat mat_inverse(const Mat& a) {
  const Ring& R = a.ring();
  const Mat residue_inv = detail::gauss_jordan_inverse(mat_reduce(a, 1));
  Mat x = mat_lift(residue_inv, a.ring_ptr());
  const Mat two = mat_scale(R.from_int(2), Mat::identity(a.ring_ptr(), a.n()));
  for (unsigned prec = 1; prec < R.r(); prec *= 2) x = mat_mul(x, mat_sub(two, mat_mul(a, x)));
  if (!mat_mul(a, x).is_identity() || !mat_mul(x, a).is_identity()) {
    throw InternalError("Newton lifting of matrix inverse failed");
  }
  return x;
}

// ---- dense integer codes ------------------------------------------------

/// Bijective code sum_k index(entry_k) |O|^k over row-major entries.
/// Requires |O|^{n^2} < 2^64.
inline std::uint64_t mat_code(const Mat& a) {
  const Ring& R = a.ring();
  const u64 base = *R.cardinality();
  u64 code = 0;
  for (std::size_t k = a.entries().size(); k-- > 0;) code = code * base + R.index_of(a.entries()[k]);
  return code;
}

inline Mat mat_from_code(const RingPtr& ring, unsigned n, std::uint64_t code) {
  Mat a(ring, n);
  const u64 base = *ring->cardinality();
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      a(i, j) = ring->from_index(code % base);
      code /= base;
    }
  }
  return a;
}

/// Whether mat_code is defined for n x n matrices over `ring`.
inline bool mat_code_fits(const Ring& ring, unsigned n) {
  const auto card = ring.cardinality();
  return card && checked_pow(*card, static_cast<u64>(n) * n).has_value();
}

// ---- text -----------------------------------------------------------------

inline Mat parse_matrix(const RingPtr& ring, std::string_view text) {
  std::vector<std::vector<RElem>> rows;
  std::size_t row_start = 0;
  while (true) {
    const std::size_t row_end = std::min(text.find(';', row_start), text.size());
    std::vector<RElem> row;
    std::size_t entry_start = row_start;
    while (true) {
      const std::size_t entry_end = std::min(text.find(',', entry_start), row_end);
      row.push_back(ring->parse(text.substr(entry_start, entry_end - entry_start), entry_start));
      if (entry_end == row_end) break;
      entry_start = entry_end + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(rows.front().size()),
                       row_start);
    }
    rows.push_back(std::move(row));
    if (row_end == text.size()) break;
    row_start = row_end + 1;
  }
  if (rows.size() != rows.front().size()) {
    throw ParseError("matrix is not square (" + std::to_string(rows.size()) + " rows, " +
                         std::to_string(rows.front().size()) + " columns)",
                     0);
  }
  Mat m(ring, static_cast<unsigned>(rows.size()));
  for (unsigned i = 0; i < m.n(); ++i)
    for (unsigned j = 0; j < m.n(); ++j) m(i, j) = rows[i][j];
  return m;
}

/// Same grammar as parse_matrix.
inline std::string render_matrix(const Mat& a) {
  std::string out;
  for (unsigned i = 0; i < a.n(); ++i) {
    if (i) out += "; ";
    for (unsigned j = 0; j < a.n(); ++j) {
      if (j) out += ", ";
      out += a.ring().render(a(i, j));
    }
  }
  return out;
}

}  // namespace kkg
