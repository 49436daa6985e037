#pragma once

// Truncated discrete valuation rings with residue field F_q:
//
//   Poly kind:  O_r  = F_q[t]/t^r,           uniformizer t
//   Witt kind:  O'_r = W_r(F_q) = GR(p^r, f) = (Z/p^r)[x]/(mhat), uniformizer p
//
// Elements are plain coefficient arrays (RElem); all arithmetic goes through
// the Ring, which is an immutable context shared by pointer.
//
// Storage layout of RElem::c
//   Poly: c[k*f + j] is the coefficient of x^j t^k, in [0, p)
//   Witt: c[j] is the coefficient of x^j, in [0, p^r)
//
// Canonical byte encoding (version 1): one version byte 0x01 followed by the
// stored coefficients in the order above, each little-endian in a fixed
// width of ceil(bits(modulus-1)/8) bytes (at least one byte).

#include <array>
#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kkg/errors.hpp"
#include "kkg/field.hpp"
#include "kkg/numtheory.hpp"

namespace kkg {

enum class RingKind { Poly, Witt };

inline const char* to_string(RingKind k) { return k == RingKind::Poly ? "poly" : "witt"; }

struct RElem {
  Coeffs c{};
  friend bool operator==(const RElem&, const RElem&) = default;
};

inline constexpr std::uint8_t kElemEncodingVersion = 1;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
 public:
  static RingPtr make(RingKind kind, u64 p, unsigned f, unsigned r) {
    return std::make_shared<const Ring>(kind, FieldDesc::make(p, f), r);
  }

  Ring(RingKind kind, FieldDesc field, unsigned r) : kind_(kind), field_(std::move(field)), r_(r) {
    if (r < 1) throw std::invalid_argument("ring length r must be >= 1");
    const unsigned f = field_.f();
    if (kind_ == RingKind::Poly) {
      if (static_cast<u64>(r) * f > kMaxCoeffs) {
        throw std::invalid_argument("r*f exceeds " + std::to_string(kMaxCoeffs) +
                                    " stored coefficients");
      }
      modulus_ = field_.p();
      width_ = r * f;
    } else {
      auto pr = checked_pow(field_.p(), r);
      if (!pr || *pr > (u64{1} << 62)) throw std::invalid_argument("p^r exceeds 2^62");
      modulus_ = *pr;
      width_ = f;
      // Naive lift: the irreducible m itself, read over Z/p^r.
      auto m = field_.modulus();
      std::copy(m.begin(), m.end(), mhat_.begin());
    }
    const u64 bits = 64 - static_cast<u64>(__builtin_clzll((modulus_ - 1) | 1));
    coeff_bytes_ = static_cast<unsigned>((bits + 7) / 8);
    if (auto card = checked_pow(modulus_, width_)) cardinality_ = *card;
  }

  RingKind kind() const { return kind_; }
  const FieldDesc& field() const { return field_; }
  u64 p() const { return field_.p(); }
  unsigned f() const { return field_.f(); }
  unsigned r() const { return r_; }
  u64 q() const { return field_.q(); }
  /// Modulus of each stored coefficient: p (Poly) or p^r (Witt).
  u64 coeff_modulus() const { return modulus_; }
  /// Number of stored coefficients.
  unsigned width() const { return width_; }
  /// Witt kind: monic lift of m over Z/p^r (f+1 coefficients).
  std::span<const u64> mhat() const { return {mhat_.data(), field_.f() + 1}; }
  /// q^r when it fits in 64 bits.
  std::optional<u64> cardinality() const { return cardinality_; }

  /// The same kind over O_s, s <= r.
  RingPtr truncated(unsigned s) const {
    if (s < 1 || s > r_) throw std::invalid_argument("truncation length out of range");
    return std::make_shared<const Ring>(kind_, field_, s);
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind_ == b.kind_ && a.r_ == b.r_ && a.field_ == b.field_;
  }

  // ---- constants ----------------------------------------------------------

  RElem zero() const { return {}; }
  RElem one() const {
    RElem e;
    e.c[0] = 1;
    return e;
  }
  /// k * 1.
  RElem from_int(long long k) const {
    const u64 mod = kind_ == RingKind::Poly ? field_.p() : modulus_;
    long long v = k % static_cast<long long>(mod);
    RElem e;
    e.c[0] = static_cast<u64>(v < 0 ? v + static_cast<long long>(mod) : v);
    return e;
  }
  /// pi: t for Poly, p for Witt. For r = 1 this is zero.
  RElem uniformizer() const {
    RElem e;
    if (r_ == 1) return e;
    if (kind_ == RingKind::Poly) {
      e.c[field_.f()] = 1;
    } else {
      e.c[0] = field_.p();
    }
    return e;
  }
  /// Class of x (the residue-field generator lifted naively).
  RElem gen_x() const { return lift(field_.gen_x()); }

  // ---- arithmetic ---------------------------------------------------------

  RElem add(const RElem& a, const RElem& b) const {
    RElem out;
    for (unsigned i = 0; i < width_; ++i) out.c[i] = addmod(a.c[i], b.c[i], modulus_);
    return out;
  }
  RElem sub(const RElem& a, const RElem& b) const {
    RElem out;
    for (unsigned i = 0; i < width_; ++i) out.c[i] = submod(a.c[i], b.c[i], modulus_);
    return out;
  }
  RElem neg(const RElem& a) const { return sub(zero(), a); }

  RElem mul(const RElem& a, const RElem& b) const {
    RElem out;
    const unsigned f = field_.f();
    if (kind_ == RingKind::Witt) {
      if (f == 1) {
        out.c[0] = mulmod(a.c[0], b.c[0], modulus_);
        return out;
      }
      detail::poly_mulmod(a.c.data(), b.c.data(), f, mhat_.data(), modulus_, out.c.data());
      return out;
    }
    if (f == 1) {
      const u64 p = field_.p();
      for (unsigned i = 0; i < r_; ++i) {
        if (a.c[i] == 0) continue;
        for (unsigned j = 0; i + j < r_; ++j) {
          out.c[i + j] = addmod(out.c[i + j], mulmod(a.c[i], b.c[j], p), p);
        }
      }
      return out;
    }
    Coeffs tmp{};
    for (unsigned i = 0; i < r_; ++i) {
      for (unsigned j = 0; i + j < r_; ++j) {
        detail::poly_mulmod(&a.c[i * f], &b.c[j * f], f, field_.modulus().data(), field_.p(),
                            tmp.data());
        for (unsigned k = 0; k < f; ++k) {
          out.c[(i + j) * f + k] = addmod(out.c[(i + j) * f + k], tmp[k], field_.p());
        }
      }
    }
    return out;
  }

  RElem pow(RElem base, u64 e) const {
    RElem acc = one();
    while (e) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }

  bool is_zero(const RElem& a) const { return a == zero(); }
  bool is_unit(const RElem& a) const { return !residue(a).is_zero(); }

  /// Inverse by residue-field inversion followed by Newton lifting
  /// x <- x(2 - a x), which doubles the precision each step.
  RElem inv(const RElem& a) const {
    const FqElem a0 = residue(a);
    if (a0.is_zero()) throw ArithmeticError("inverse of a non-unit in O_r");
    RElem x = lift(field_.inv(a0));
    const RElem two = from_int(2);
    for (unsigned prec = 1; prec < r_; prec *= 2) x = mul(x, sub(two, mul(a, x)));
    if (mul(a, x) != one()) throw InternalError("Newton inversion did not converge");
    return x;
  }

  /// Largest v with a in pi^v O_r; valuation(0) = r.
  unsigned valuation(const RElem& a) const {
    const unsigned f = field_.f();
    if (kind_ == RingKind::Poly) {
      for (unsigned k = 0; k < r_; ++k) {
        for (unsigned j = 0; j < f; ++j)
          if (a.c[k * f + j]) return k;
      }
      return r_;
    }
    unsigned v = r_;
    for (unsigned j = 0; j < f; ++j) {
      u64 c = a.c[j];
      if (c == 0) continue;
      unsigned vj = 0;
      while (c % field_.p() == 0) {
        c /= field_.p();
        ++vj;
      }
      v = std::min(v, vj);
    }
    return v;
  }

  /// pi^k * a.
  RElem shift_up(const RElem& a, unsigned k) const {
    RElem out;
    if (k >= r_) return out;
    if (kind_ == RingKind::Poly) {
      const unsigned f = field_.f();
      for (unsigned i = 0; i + k < r_; ++i)
        for (unsigned j = 0; j < f; ++j) out.c[(i + k) * f + j] = a.c[i * f + j];
      return out;
    }
    const u64 pk = pow_or_throw(field_.p(), k);
    for (unsigned j = 0; j < width_; ++j) out.c[j] = mulmod(a.c[j], pk, modulus_);
    return out;
  }

  /// Some b with pi^k * b = a; requires valuation(a) >= k.
  RElem shift_down(const RElem& a, unsigned k) const {
    if (valuation(a) < k) throw ArithmeticError("element is not divisible by pi^k");
    RElem out;
    if (kind_ == RingKind::Poly) {
      const unsigned f = field_.f();
      for (unsigned i = k; i < r_; ++i)
        for (unsigned j = 0; j < f; ++j) out.c[(i - k) * f + j] = a.c[i * f + j];
      return out;
    }
    const u64 pk = pow_or_throw(field_.p(), k);
    for (unsigned j = 0; j < width_; ++j) out.c[j] = a.c[j] / pk;
    return out;
  }

  /// Some c with a*c = b; requires valuation(b) >= valuation(a).
  RElem divide_exact(const RElem& b, const RElem& a) const {
    const unsigned va = valuation(a);
    const unsigned vb = valuation(b);
    if (vb < va) throw ArithmeticError("divide_exact: divisor has larger valuation");
    if (vb == r_) return zero();
    const RElem unit = shift_down(a, va);
    return mul(shift_down(b, va), inv(unit));
  }

  // ---- residue map, lifts, Teichmueller ----------------------------------

  /// Image in F_q = O_1.
  FqElem residue(const RElem& a) const {
    FqElem out;
    const unsigned f = field_.f();
    for (unsigned j = 0; j < f; ++j) out.c[j] = a.c[j] % field_.p();
    return out;
  }

  /// Coefficient-wise lift of a residue (constant term in t for Poly).
  RElem lift(const FqElem& a) const {
    RElem out;
    for (unsigned j = 0; j < field_.f(); ++j) out.c[j] = a.c[j];
    return out;
  }

  /// Image in O_s; interpret the result with truncated(s).
  RElem reduce(const RElem& a, unsigned s) const {
    if (s < 1 || s > r_) throw std::invalid_argument("reduce: target length out of range");
    RElem out;
    if (kind_ == RingKind::Poly) {
      for (unsigned i = 0; i < s * field_.f(); ++i) out.c[i] = a.c[i];
      return out;
    }
    const u64 ps = pow_or_throw(field_.p(), s);
    for (unsigned j = 0; j < width_; ++j) out.c[j] = a.c[j] % ps;
    return out;
  }

  /// Teichmueller representative: (any lift)^{q^{r-1}}; the constant
  /// embedding for the Poly kind.
  RElem teichmuller(const FqElem& a) const {
    RElem x = lift(a);
    if (kind_ == RingKind::Poly) return x;
    for (unsigned i = 1; i < r_; ++i) x = pow(x, field_.q());
    return x;
  }

  /// Digits a_0..a_{r-1} with a = sum tau(a_i) pi^i.
  std::vector<FqElem> witt_digits(const RElem& a) const {
    std::vector<FqElem> digits;
    digits.reserve(r_);
    if (kind_ == RingKind::Poly) {
      const unsigned f = field_.f();
      for (unsigned k = 0; k < r_; ++k) {
        FqElem d;
        for (unsigned j = 0; j < f; ++j) d.c[j] = a.c[k * f + j];
        digits.push_back(d);
      }
      return digits;
    }
    RElem rest = a;
    for (unsigned k = 0; k < r_; ++k) {
      const FqElem d = residue(rest);
      digits.push_back(d);
      if (k + 1 < r_) rest = shift_down(sub(rest, teichmuller(d)), 1);
    }
    return digits;
  }

  RElem from_digits(std::span<const FqElem> digits) const {
    if (digits.size() != r_) throw std::invalid_argument("expected r digits");
    RElem out;
    for (unsigned k = 0; k < r_; ++k) out = add(out, shift_up(teichmuller(digits[k]), k));
    return out;
  }

  // ---- indexing and encodings --------------------------------------------

  /// Mixed-radix index in [0, cardinality).
  u64 index_of(const RElem& a) const {
    u64 idx = 0;
    for (unsigned i = width_; i-- > 0;) idx = idx * modulus_ + a.c[i];
    return idx;
  }
  RElem from_index(u64 idx) const {
    RElem e;
    for (unsigned i = 0; i < width_; ++i) {
      e.c[i] = idx % modulus_;
      idx /= modulus_;
    }
    return e;
  }

  unsigned coeff_bytes() const { return coeff_bytes_; }

  std::vector<std::uint8_t> encode(const RElem& a) const {
    std::vector<std::uint8_t> out;
    out.reserve(1 + width_ * coeff_bytes_);
    out.push_back(kElemEncodingVersion);
    for (unsigned i = 0; i < width_; ++i) {
      for (unsigned b = 0; b < coeff_bytes_; ++b) {
        out.push_back(static_cast<std::uint8_t>(a.c[i] >> (8 * b)));
      }
    }
    return out;
  }

  RElem decode(std::span<const std::uint8_t> bytes) const {
    if (bytes.size() != 1 + width_ * coeff_bytes_ || bytes[0] != kElemEncodingVersion) {
      throw std::invalid_argument("bad element encoding");
    }
    RElem e;
    for (unsigned i = 0; i < width_; ++i) {
      u64 v = 0;
      for (unsigned b = 0; b < coeff_bytes_; ++b) {
        v |= static_cast<u64>(bytes[1 + i * coeff_bytes_ + b]) << (8 * b);
      }
      if (v >= modulus_) throw std::invalid_argument("encoded coefficient out of range");
      e.c[i] = v;
    }
    return e;
  }

  // ---- text ---------------------------------------------------------------

  /// "a0 + a1*t + a2*t^2" (Poly, coefficients in F_q parenthesised when
  /// f > 1) or "c0 + c1*x + ..." (Witt).
  std::string render(const RElem& a) const {
    std::ostringstream os;
    bool first = true;
    auto term = [&](const std::string& coef, const std::string& mono) {
      if (!first) os << " + ";
      first = false;
      if (mono.empty()) {
        os << coef;
      } else if (coef == "1") {
        os << mono;
      } else {
        os << coef << '*' << mono;
      }
    };
    auto power = [](const char* var, unsigned k) -> std::string {
      if (k == 0) return "";
      if (k == 1) return var;
      return std::string(var) + "^" + std::to_string(k);
    };
    const unsigned f = field_.f();
    if (kind_ == RingKind::Witt) {
      for (unsigned j = 0; j < f; ++j)
        if (a.c[j]) term(std::to_string(a.c[j]), power("x", j));
    } else {
      for (unsigned k = 0; k < r_; ++k) {
        std::vector<std::string> parts;
        for (unsigned j = 0; j < f; ++j) {
          const u64 c = a.c[k * f + j];
          if (!c) continue;
          const std::string m = power("x", j);
          parts.push_back(m.empty() ? std::to_string(c) : (c == 1 ? m : std::to_string(c) + "*" + m));
        }
        if (parts.empty()) continue;
        std::string coef = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i) coef += " + " + parts[i];
        if (parts.size() > 1 && k > 0) coef = "(" + coef + ")";
        term(coef, power("t", k));
      }
    }
    return first ? "0" : os.str();
  }

  /// Parses a ring-element literal: sums and products of integers, x (when
  /// f > 1) and t (Poly kind), with '^' powers and parentheses. Implicit
  /// multiplication is allowed ("2t", "3x^2t"). `base` offsets reported
  /// error positions.
  RElem parse(std::string_view text, std::size_t base = 0) const;

 private:
  RingKind kind_;
  FieldDesc field_;
  unsigned r_;
  u64 modulus_ = 0;
  unsigned width_ = 0;
  unsigned coeff_bytes_ = 1;
  std::array<u64, kMaxCoeffs + 1> mhat_{};
  std::optional<u64> cardinality_;
};

namespace detail {

class ElemParser {
 public:
  ElemParser(const Ring& ring, std::string_view s, std::size_t base)
      : ring_(ring), s_(s), base_(base) {}

  RElem run() {
    skip();
    if (pos_ == s_.size()) fail("empty ring element literal");
    RElem v = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, base_ + pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  RElem expr() {
    bool negate = false;
    if (peek('+') || peek('-')) negate = s_[pos_++] == '-';
    RElem acc = term();
    if (negate) acc = ring_.neg(acc);
    while (peek('+') || peek('-')) {
      const bool minus = s_[pos_++] == '-';
      RElem t = term();
      acc = minus ? ring_.sub(acc, t) : ring_.add(acc, t);
    }
    return acc;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 't' || c == '(';
  }

  RElem term() {
    RElem acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = ring_.mul(acc, factor());
      } else if (starts_factor()) {
        acc = ring_.mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  u64 integer() {
    skip();
    const std::size_t start = pos_;
    u64 v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const u64 d = static_cast<u64>(s_[pos_] - '0');
      if (v > (UINT64_MAX - d) / 10) {
        pos_ = start;
        fail("integer literal too large");
      }
      v = v * 10 + d;
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return v;
  }

  RElem factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of literal");
    RElem base;
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      base = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
    } else if (c == 'x') {
      if (ring_.f() == 1) fail("'x' is only meaningful for extension degree f > 1");
      ++pos_;
      base = ring_.gen_x();
    } else if (c == 't') {
      if (ring_.kind() != RingKind::Poly) fail("'t' is not defined for the Witt kind; use p");
      ++pos_;
      base = ring_.uniformizer();
      if (ring_.r() == 1) base = ring_.zero();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const u64 v = integer();
      const u64 mod = ring_.kind() == RingKind::Poly ? ring_.p() : ring_.coeff_modulus();
      base = ring_.from_int(static_cast<long long>(v % mod));
    } else {
      fail(std::string("unexpected '") + c + "'");
    }
    if (peek('^')) {
      ++pos_;
      base = ring_.pow(base, integer());
    }
    return base;
  }

  const Ring& ring_;
  std::string_view s_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RElem Ring::parse(std::string_view text, std::size_t base) const {
  return detail::ElemParser(*this, text, base).run();
}

}  // namespace kkg
