#pragma once

// Exact arithmetic in Q(sqrt2, sqrt3) with basis {1, sqrt2, sqrt3, sqrt6}.
//
// The field contains sin, cos and tan of every multiple of 15 degrees, so
// every coordinate, dot product and reflection that the tiling code needs
// stays exact. Coefficients are GMP rationals, always kept canonical.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "edgetess/errors.hpp"

namespace edgetess {

using Rational = mpq_class;

/// Closed rational interval.
struct Interval {
  Rational lo;
  Rational hi;
};

namespace detail {

// floor(sqrt(n) * 2^bits) / 2^bits and that plus one ulp.
inline Interval sqrt_enclosure(unsigned long n, unsigned bits) {
  mpz_class scaled = mpz_class(n) << (2 * bits);
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  mpz_class den = mpz_class(1) << bits;
  Interval iv{Rational(root, den), Rational(root + 1, den)};
  iv.lo.canonicalize();
  iv.hi.canonicalize();
  return iv;
}

struct RadicalEnclosures {
  Interval r2, r3, r6;
};

inline RadicalEnclosures radical_enclosures(unsigned bits) {
  return {sqrt_enclosure(2, bits), sqrt_enclosure(3, bits), sqrt_enclosure(6, bits)};
}

inline const RadicalEnclosures& base_enclosures() {
  static const RadicalEnclosures enc = radical_enclosures(64);
  return enc;
}

inline constexpr unsigned kBaseBits = 64;

// c * [lo, hi], added into acc.
inline void accumulate(Interval& acc, const Rational& c, const Interval& r) {
  const int s = sgn(c);
  if (s == 0) return;
  if (s > 0) {
    acc.lo += c * r.lo;
    acc.hi += c * r.hi;
  } else {
    acc.lo += c * r.hi;
    acc.hi += c * r.lo;
  }
}

inline bool parse_rational_token(std::string_view tok, Rational& out) {
  if (tok.empty()) return false;
  std::size_t i = 0;
  if (tok[0] == '-') i = 1;
  std::size_t digits = 0;
  std::size_t slash = std::string_view::npos;
  for (std::size_t k = i; k < tok.size(); ++k) {
    char ch = tok[k];
    if (ch == '/') {
      if (slash != std::string_view::npos || digits == 0) return false;
      slash = k;
      digits = 0;
    } else if (ch >= '0' && ch <= '9') {
      ++digits;
    } else {
      return false;
    }
  }
  if (digits == 0) return false;
  if (slash != std::string_view::npos) {
    mpz_class den(std::string(tok.substr(slash + 1)), 10);
    if (den == 0) return false;
    mpz_class num(std::string(tok.substr(0, slash)), 10);
    out = Rational(num, den);
    out.canonicalize();
  } else {
    out = Rational(mpz_class(std::string(tok), 10));
  }
  return true;
}

inline std::string rational_text(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace detail

class ExtScalar {
 public:
  ExtScalar() = default;
  ExtScalar(long v) : c_{Rational(v), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  ExtScalar(const Rational& v) : c_{v, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  ExtScalar(Rational c1, Rational c2, Rational c3, Rational c6)
      : c_{std::move(c1), std::move(c2), std::move(c3), std::move(c6)} {
    for (auto& q : c_) q.canonicalize();
  }

  static ExtScalar sqrt2() { return {0, 1, 0, 0}; }
  static ExtScalar sqrt3() { return {0, 0, 1, 0}; }
  static ExtScalar sqrt6() { return {0, 0, 0, 1}; }
  static ExtScalar rational(long num, long den) { return ExtScalar(Rational(num, den), 0, 0, 0); }

  const Rational& c1() const { return c_[0]; }
  const Rational& c2() const { return c_[1]; }
  const Rational& c3() const { return c_[2]; }
  const Rational& c6() const { return c_[3]; }
  const std::array<Rational, 4>& coefficients() const { return c_; }

  bool is_zero() const { return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }
  bool is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }

  friend ExtScalar operator+(const ExtScalar& x, const ExtScalar& y) {
    ExtScalar r;
    for (int i = 0; i < 4; ++i) r.c_[i] = x.c_[i] + y.c_[i];
    return r;
  }
  friend ExtScalar operator-(const ExtScalar& x, const ExtScalar& y) {
    ExtScalar r;
    for (int i = 0; i < 4; ++i) r.c_[i] = x.c_[i] - y.c_[i];
    return r;
  }
  friend ExtScalar operator-(const ExtScalar& x) {
    ExtScalar r;
    for (int i = 0; i < 4; ++i) r.c_[i] = -x.c_[i];
    return r;
  }
  friend ExtScalar operator*(const ExtScalar& x, const ExtScalar& y) {
    const auto& [a1, a2, a3, a6] = x.c_;
    const auto& [b1, b2, b3, b6] = y.c_;
    ExtScalar r;
    r.c_[0] = a1 * b1 + 2 * a2 * b2 + 3 * a3 * b3 + 6 * a6 * b6;
    r.c_[1] = a1 * b2 + a2 * b1 + 3 * (a3 * b6 + a6 * b3);
    r.c_[2] = a1 * b3 + a3 * b1 + 2 * (a2 * b6 + a6 * b2);
    r.c_[3] = a1 * b6 + a6 * b1 + a2 * b3 + a3 * b2;
    return r;
  }
  friend ExtScalar operator/(const ExtScalar& x, const ExtScalar& y) { return x * y.inv(); }

  ExtScalar& operator+=(const ExtScalar& y) { return *this = *this + y; }
  ExtScalar& operator-=(const ExtScalar& y) { return *this = *this - y; }
  ExtScalar& operator*=(const ExtScalar& y) { return *this = *this * y; }
  ExtScalar& operator/=(const ExtScalar& y) { return *this = *this / y; }

  /// Multiplicative inverse via the Galois conjugates; throws division_by_zero on 0.
  ExtScalar inv() const {
    if (is_zero()) throw division_by_zero();
    // x = A + B*sqrt3 with A, B in Q(sqrt2).
    const auto& [a1, a2, a3, a6] = c_;
    // A^2 - 3 B^2 = p + q*sqrt2
    Rational p = a1 * a1 + 2 * a2 * a2 - 3 * (a3 * a3 + 2 * a6 * a6);
    Rational q = 2 * a1 * a2 - 6 * a3 * a6;
    Rational norm = p * p - 2 * q * q;
    ExtScalar conj3(a1, a2, -a3, -a6);
    ExtScalar conj2(p / norm, -q / norm, 0, 0);
    return conj3 * conj2;
  }

  /// Exact sign. Zero is decided structurally, anything else by refining
  /// rational enclosures of the radicals until the interval excludes zero.
  int sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return sgn(c_[0]);
    Interval iv = enclose(detail::base_enclosures());
    for (unsigned bits = detail::kBaseBits;; bits *= 2) {
      if (bits != detail::kBaseBits) iv = enclose(detail::radical_enclosures(bits));
      if (sgn(iv.lo) > 0) return 1;
      if (sgn(iv.hi) < 0) return -1;
    }
  }

  /// Certified enclosure of the value with radicals known to `bits` bits.
  Interval enclosure(unsigned bits) const {
    return bits == detail::kBaseBits ? enclose(detail::base_enclosures())
                                     : enclose(detail::radical_enclosures(bits));
  }

  /// Decimal rendering with `digits` significant digits, round to nearest
  /// (ties away from zero, reachable only for rational values).
  std::string approx(int digits) const;

  /// Four space-separated rationals `c1 c2 c3 c6`.
  std::string to_text() const {
    return detail::rational_text(c_[0]) + " " + detail::rational_text(c_[1]) + " " +
           detail::rational_text(c_[2]) + " " + detail::rational_text(c_[3]);
  }

  /// Human-readable form such as `1/2 + 1/3*sqrt3`.
  std::string pretty() const {
    static constexpr std::array<const char*, 4> names{"", "sqrt2", "sqrt3", "sqrt6"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
      if (sgn(c_[i]) == 0) continue;
      Rational mag = abs(c_[i]);
      std::string term;
      if (i == 0) {
        term = detail::rational_text(mag);
      } else {
        term = (mag == 1 ? std::string() : detail::rational_text(mag) + "*") + names[i];
      }
      if (out.empty()) {
        out = (sgn(c_[i]) < 0 ? "-" : "") + term;
      } else {
        out += (sgn(c_[i]) < 0 ? " - " : " + ") + term;
      }
    }
    return out.empty() ? "0" : out;
  }

  /// Parses four rational tokens (`p` or `p/q`).
  static ExtScalar from_tokens(std::string_view t1, std::string_view t2, std::string_view t3,
                               std::string_view t6) {
    std::array<Rational, 4> c;
    std::array<std::string_view, 4> toks{t1, t2, t3, t6};
    for (int i = 0; i < 4; ++i) {
      if (!detail::parse_rational_token(toks[i], c[i]))
        throw parse_error(0, "malformed rational '" + std::string(toks[i]) + "'");
    }
    return ExtScalar(c[0], c[1], c[2], c[3]);
  }

  static ExtScalar from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string t[5];
    in >> t[0] >> t[1] >> t[2] >> t[3];
    if (t[3].empty() || (in >> t[4]))
      throw parse_error(0, "expected four rational coefficients");
    return from_tokens(t[0], t[1], t[2], t[3]);
  }

  friend bool operator==(const ExtScalar& x, const ExtScalar& y) { return x.c_ == y.c_; }

  /// Total order on the representation (not on the value); used for keys.
  friend std::strong_ordering structural_compare(const ExtScalar& x, const ExtScalar& y) {
    for (int i = 0; i < 4; ++i) {
      int c = cmp(x.c_[i], y.c_[i]);
      if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtScalar& x) { return os << x.pretty(); }

 private:
  Interval enclose(const detail::RadicalEnclosures& r) const {
    Interval acc{c_[0], c_[0]};
    detail::accumulate(acc, c_[1], r.r2);
    detail::accumulate(acc, c_[2], r.r3);
    detail::accumulate(acc, c_[3], r.r6);
    return acc;
  }

  std::array<Rational, 4> c_{};
};

inline int sign(const ExtScalar& x) { return x.sign(); }
inline ExtScalar inv(const ExtScalar& x) { return x.inv(); }
inline int compare(const ExtScalar& x, const ExtScalar& y) { return (x - y).sign(); }
inline const ExtScalar& min_value(const ExtScalar& x, const ExtScalar& y) { return compare(y, x) < 0 ? y : x; }
inline const ExtScalar& max_value(const ExtScalar& x, const ExtScalar& y) { return compare(y, x) > 0 ? y : x; }

namespace detail {

inline mpz_class pow10(long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

// 10^e as a rational, e may be negative.
inline Rational pow10q(long e) {
  if (e >= 0) return Rational(pow10(e));
  Rational r(mpz_class(1), pow10(-e));
  return r;
}

// floor(log10(v)) for v > 0.
inline long decimal_exponent(const Rational& v) {
  long e = static_cast<long>(mpz_sizeinbase(v.get_num().get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(v.get_den().get_mpz_t(), 10));
  while (v >= pow10q(e + 1)) ++e;
  while (v < pow10q(e)) --e;
  return e;
}

// Round v >= 0 to the nearest integer, ties upward.
inline mpz_class round_half_up(const Rational& v) {
  Rational shifted = v + Rational(1, 2);
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
  return r;
}

inline std::string place_point(const std::string& mantissa, long exponent) {
  const long n = static_cast<long>(mantissa.size());
  if (exponent >= n - 1) return mantissa + std::string(static_cast<std::size_t>(exponent - n + 1), '0');
  if (exponent >= 0) {
    return mantissa.substr(0, static_cast<std::size_t>(exponent + 1)) + "." +
           mantissa.substr(static_cast<std::size_t>(exponent + 1));
  }
  return "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + mantissa;
}

}  // namespace detail

inline std::string ExtScalar::approx(int digits) const {
  if (digits < 1) throw argument_out_of_range("approx needs at least one significant digit");
  if (is_zero()) return digits == 1 ? "0" : "0." + std::string(static_cast<std::size_t>(digits - 1), '0');
  const int s = sign();
  for (unsigned bits = detail::kBaseBits;; bits *= 2) {
    Interval iv = enclosure(bits);
    Rational lo = s > 0 ? iv.lo : -iv.hi;
    Rational hi = s > 0 ? iv.hi : -iv.lo;
    if (sgn(lo) <= 0) continue;
    const long e = detail::decimal_exponent(lo);
    if (detail::decimal_exponent(hi) != e) continue;
    const Rational scale = detail::pow10q(digits - 1 - e);
    mpz_class n_lo = detail::round_half_up(lo * scale);
    mpz_class n_hi = detail::round_half_up(hi * scale);
    if (n_lo != n_hi) continue;
    long exponent = e;
    if (n_lo == detail::pow10(digits)) {
      n_lo = detail::pow10(digits - 1);
      ++exponent;
    }
    return (s < 0 ? "-" : "") + detail::place_point(n_lo.get_str(), exponent);
  }
}

/// Textual form of `approx` as a free function.
inline std::string approx(const ExtScalar& x, int digits) { return x.approx(digits); }

}  // namespace edgetess
