#pragma once

#include <array>
#include <compare>
#include <optional>
#include <ostream>

#include "edgetess/errors.hpp"
#include "edgetess/ext_scalar.hpp"

namespace edgetess {

struct Vec2 {
  ExtScalar dx;
  ExtScalar dy;

  bool is_zero() const { return dx.is_zero() && dy.is_zero(); }

  friend Vec2 operator+(const Vec2& u, const Vec2& v) { return {u.dx + v.dx, u.dy + v.dy}; }
  friend Vec2 operator-(const Vec2& u, const Vec2& v) { return {u.dx - v.dx, u.dy - v.dy}; }
  friend Vec2 operator-(const Vec2& u) { return {-u.dx, -u.dy}; }
  friend Vec2 operator*(const ExtScalar& s, const Vec2& u) { return {s * u.dx, s * u.dy}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

struct Point2 {
  ExtScalar x;
  ExtScalar y;

  friend Vec2 operator-(const Point2& p, const Point2& q) { return {p.x - q.x, p.y - q.y}; }
  friend Point2 operator+(const Point2& p, const Vec2& v) { return {p.x + v.dx, p.y + v.dy}; }
  friend bool operator==(const Point2&, const Point2&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Point2& p) {
    return os << "(" << p.x << ", " << p.y << ")";
  }
};

/// Structural total order on points, used for map keys and canonical signatures.
struct PointLess {
  bool operator()(const Point2& p, const Point2& q) const {
    auto c = structural_compare(p.x, q.x);
    if (c != 0) return c < 0;
    return structural_compare(p.y, q.y) < 0;
  }
};

inline std::strong_ordering structural_compare(const Point2& p, const Point2& q) {
  auto c = structural_compare(p.x, q.x);
  if (c != 0) return c;
  return structural_compare(p.y, q.y);
}

inline ExtScalar dot(const Vec2& u, const Vec2& v) { return u.dx * v.dx + u.dy * v.dy; }
inline ExtScalar cross(const Vec2& u, const Vec2& v) { return u.dx * v.dy - u.dy * v.dx; }
inline ExtScalar squared_length(const Vec2& u) { return dot(u, u); }
inline ExtScalar squared_distance(const Point2& p, const Point2& q) { return squared_length(p - q); }

/// Orientation of (a, b, c): +1 counterclockwise, -1 clockwise, 0 collinear.
inline int orientation(const Point2& a, const Point2& b, const Point2& c) {
  return cross(b - a, c - a).sign();
}

/// Affine isometry x -> M x + t with orthogonal M; parity is det(M).
class Isometry {
 public:
  Isometry() : m11_(1), m12_(0), m21_(0), m22_(1), tx_(0), ty_(0), parity_(1) {}

  static Isometry identity() { return {}; }

  /// Builds from raw parts; the caller guarantees orthogonality.
  static Isometry from_parts(ExtScalar m11, ExtScalar m12, ExtScalar m21, ExtScalar m22, ExtScalar tx,
                             ExtScalar ty) {
    Isometry f;
    f.m11_ = std::move(m11);
    f.m12_ = std::move(m12);
    f.m21_ = std::move(m21);
    f.m22_ = std::move(m22);
    f.tx_ = std::move(tx);
    f.ty_ = std::move(ty);
    f.parity_ = (f.m11_ * f.m22_ - f.m12_ * f.m21_).sign();
    return f;
  }

  /// Rotation about the origin given exact cos and sin.
  static Isometry rotation(const ExtScalar& cos, const ExtScalar& sin) {
    return from_parts(cos, -sin, sin, cos, 0, 0);
  }

  static Isometry translation(const Vec2& v) { return from_parts(1, 0, 0, 1, v.dx, v.dy); }

  static Isometry scaling(const ExtScalar& s) { return from_parts(s, 0, 0, s, 0, 0); }

  const ExtScalar& m11() const { return m11_; }
  const ExtScalar& m12() const { return m12_; }
  const ExtScalar& m21() const { return m21_; }
  const ExtScalar& m22() const { return m22_; }
  const ExtScalar& tx() const { return tx_; }
  const ExtScalar& ty() const { return ty_; }
  int parity() const { return parity_; }

  Point2 apply(const Point2& p) const {
    return {m11_ * p.x + m12_ * p.y + tx_, m21_ * p.x + m22_ * p.y + ty_};
  }

  Vec2 apply(const Vec2& v) const { return {m11_ * v.dx + m12_ * v.dy, m21_ * v.dx + m22_ * v.dy}; }

  /// True when the linear part is orthogonal with determinant equal to parity.
  bool is_orthogonal() const {
    ExtScalar det = m11_ * m22_ - m12_ * m21_;
    return m11_ * m11_ + m21_ * m21_ == ExtScalar(1) && m12_ * m12_ + m22_ * m22_ == ExtScalar(1) &&
           (m11_ * m12_ + m21_ * m22_).is_zero() && det == ExtScalar(parity_);
  }

  friend bool operator==(const Isometry&, const Isometry&) = default;

  friend Isometry compose(const Isometry& f, const Isometry& g);

 private:
  ExtScalar m11_, m12_, m21_, m22_;
  ExtScalar tx_, ty_;
  int parity_;
};

/// f after g.
inline Isometry compose(const Isometry& f, const Isometry& g) {
  Isometry r;
  r.m11_ = f.m11_ * g.m11_ + f.m12_ * g.m21_;
  r.m12_ = f.m11_ * g.m12_ + f.m12_ * g.m22_;
  r.m21_ = f.m21_ * g.m11_ + f.m22_ * g.m21_;
  r.m22_ = f.m21_ * g.m12_ + f.m22_ * g.m22_;
  r.tx_ = f.m11_ * g.tx_ + f.m12_ * g.ty_ + f.tx_;
  r.ty_ = f.m21_ * g.tx_ + f.m22_ * g.ty_ + f.ty_;
  r.parity_ = f.parity_ * g.parity_;
  return r;
}

inline Point2 apply(const Isometry& f, const Point2& p) { return f.apply(p); }

/// Mirror in the line through a and b.
inline Isometry reflection_across(const Point2& a, const Point2& b) {
  const Vec2 d = b - a;
  if (d.is_zero()) throw degenerate_edge();
  const ExtScalar inv_len2 = squared_length(d).inv();
  const ExtScalar xx = d.dx * d.dx;
  const ExtScalar yy = d.dy * d.dy;
  const ExtScalar m11 = (xx - yy) * inv_len2;
  const ExtScalar m12 = 2 * d.dx * d.dy * inv_len2;
  const ExtScalar m22 = (yy - xx) * inv_len2;
  // a must be fixed: t = a - M a
  ExtScalar tx = a.x - (m11 * a.x + m12 * a.y);
  ExtScalar ty = a.y - (m12 * a.x + m22 * a.y);
  return Isometry::from_parts(m11, m12, m12, m22, std::move(tx), std::move(ty));
}

/// Exact tangents of 15, 30, 45, 60 and 75 degrees.
inline const std::array<ExtScalar, 5>& tangent_table() {
  static const std::array<ExtScalar, 5> table{
      ExtScalar(2) - ExtScalar::sqrt3(),                      // 15
      ExtScalar(0, 0, Rational(1, 3), 0),                     // 30
      ExtScalar(1),                                           // 45
      ExtScalar::sqrt3(),                                     // 60
      ExtScalar(2) + ExtScalar::sqrt3(),                      // 75
  };
  return table;
}

namespace detail {

// Acute angle alpha in (0, 90) with tan(alpha) = num/den, num, den > 0.
inline std::optional<int> acute_from_tangent(const ExtScalar& num, const ExtScalar& den) {
  const ExtScalar t = num / den;
  const auto& table = tangent_table();
  for (int k = 0; k < 5; ++k) {
    if (t == table[static_cast<std::size_t>(k)]) return 15 * (k + 1);
  }
  return std::nullopt;
}

}  // namespace detail

/// Counterclockwise angle from u to v in (0, 360) when it is a multiple of
/// 15 degrees; nullopt otherwise (including the parallel case, angle 0).
inline std::optional<int> classify_angle(const Vec2& u, const Vec2& v) {
  if (u.is_zero() || v.is_zero()) throw zero_vector();
  const ExtScalar d = dot(u, v);
  const ExtScalar c = cross(u, v);
  const int sd = d.sign();
  const int sc = c.sign();
  if (sc == 0) return sd > 0 ? std::nullopt : std::optional<int>(180);
  if (sd == 0) return sc > 0 ? 90 : 270;
  // Quadrant by sign pair, then the reference angle from |c| / |d|.
  const ExtScalar ac = sc > 0 ? c : -c;
  const ExtScalar ad = sd > 0 ? d : -d;
  auto alpha = detail::acute_from_tangent(ac, ad);
  if (!alpha) return std::nullopt;
  if (sd > 0 && sc > 0) return *alpha;
  if (sd < 0 && sc > 0) return 180 - *alpha;
  if (sd < 0 && sc < 0) return 180 + *alpha;
  return 360 - *alpha;
}

/// Exact (cos, sin) of a multiple of 15 degrees.
inline std::pair<ExtScalar, ExtScalar> unit_direction(int degrees) {
  degrees = ((degrees % 360) + 360) % 360;
  // cos of 0, 15, ..., 90
  const std::array<ExtScalar, 7> cosines{
      ExtScalar(1),
      ExtScalar(0, Rational(1, 4), 0, Rational(1, 4)),   // (sqrt6 + sqrt2) / 4
      ExtScalar(0, 0, Rational(1, 2), 0),                // sqrt3 / 2
      ExtScalar(0, Rational(1, 2), 0, 0),                // sqrt2 / 2
      ExtScalar(Rational(1, 2)),                         // 1/2
      ExtScalar(0, Rational(-1, 4), 0, Rational(1, 4)),  // (sqrt6 - sqrt2) / 4
      ExtScalar(0),
  };
  if (degrees % 15 != 0) throw argument_out_of_range("angle is not a multiple of 15 degrees");
  const int step = degrees / 15;  // 0..23
  const int quadrant = step / 6;
  const int r = step % 6;
  const ExtScalar& c = cosines[static_cast<std::size_t>(r)];
  const ExtScalar& s = cosines[static_cast<std::size_t>(6 - r)];
  switch (quadrant) {
    case 0: return {c, s};
    case 1: return {-s, c};
    case 2: return {-c, -s};
    default: return {s, -c};
  }
}

/// Rotation about the origin by a multiple of 15 degrees.
inline Isometry rotation_degrees(int degrees) {
  auto [c, s] = unit_direction(degrees);
  return Isometry::rotation(c, s);
}

}  // namespace edgetess
