#pragma once

// The eight polygon families that generate edge tessellations, their
// canonical exact representatives, and a classifier for arbitrary polygons.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "edgetess/angle_solver.hpp"
#include "edgetess/errors.hpp"
#include "edgetess/ext_scalar.hpp"
#include "edgetess/geometry.hpp"
#include "edgetess/polygon.hpp"

namespace edgetess {

enum class FamilyTag {
  Equilateral,
  ThirtyRight,
  IsoscelesRight,
  OneTwentyIsosceles,
  Rectangle,
  SixtyRhombus,
  Kite609012090,
  RegularHexagon,
};

inline constexpr std::array<FamilyTag, 8> kAllFamilyTags{
    FamilyTag::Equilateral,  FamilyTag::ThirtyRight,  FamilyTag::IsoscelesRight, FamilyTag::OneTwentyIsosceles,
    FamilyTag::Rectangle,    FamilyTag::SixtyRhombus, FamilyTag::Kite609012090,  FamilyTag::RegularHexagon,
};

inline std::string_view tag_name(FamilyTag t) {
  switch (t) {
    case FamilyTag::Equilateral: return "Equilateral";
    case FamilyTag::ThirtyRight: return "ThirtyRight";
    case FamilyTag::IsoscelesRight: return "IsoscelesRight";
    case FamilyTag::OneTwentyIsosceles: return "OneTwentyIsosceles";
    case FamilyTag::Rectangle: return "Rectangle";
    case FamilyTag::SixtyRhombus: return "SixtyRhombus";
    case FamilyTag::Kite609012090: return "Kite609012090";
    case FamilyTag::RegularHexagon: return "RegularHexagon";
  }
  return "?";
}

/// Case-insensitive lookup; also accepts the short alias "Kite".
inline std::optional<FamilyTag> parse_tag(std::string_view name) {
  auto lower = [](std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
  };
  const std::string key = lower(name);
  if (key == "kite") return FamilyTag::Kite609012090;
  for (FamilyTag t : kAllFamilyTags) {
    if (lower(tag_name(t)) == key) return t;
  }
  return std::nullopt;
}

/// Whether a family has a 120 degree interior angle.
inline bool has_obtuse_120(FamilyTag t) {
  return t == FamilyTag::OneTwentyIsosceles || t == FamilyTag::SixtyRhombus || t == FamilyTag::Kite609012090 ||
         t == FamilyTag::RegularHexagon;
}

struct Family {
  FamilyTag tag = FamilyTag::Equilateral;
  /// Rectangle only: short side over long side, in (0, 1].
  std::optional<ExtScalar> ratio;

  static Family rectangle(const ExtScalar& ratio) { return {FamilyTag::Rectangle, ratio}; }

  std::string to_string() const {
    std::string s(tag_name(tag));
    if (ratio) s += " ratio " + ratio->pretty();
    return s;
  }

  friend bool operator==(const Family&, const Family&) = default;
};

enum class RejectReason { AngleSet, EdgeCount, Kaleidoscope, NoFamily };

inline std::string_view reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::AngleSet: return "angle-set";
    case RejectReason::EdgeCount: return "edge-count";
    case RejectReason::Kaleidoscope: return "kaleidoscope";
    case RejectReason::NoFamily: return "no-family";
  }
  return "?";
}

struct Rejection {
  RejectReason reason;
  std::string detail;
};

using ClassifyResult = std::variant<Family, Rejection>;

inline bool accepted(const ClassifyResult& r) { return std::holds_alternative<Family>(r); }

inline std::string to_string(const ClassifyResult& r) {
  if (const auto* f = std::get_if<Family>(&r)) return f->to_string();
  const auto& rej = std::get<Rejection>(r);
  return "rejected " + std::string(reason_name(rej.reason)) + ": " + rej.detail;
}

namespace detail {

inline Point2 pt(ExtScalar x, ExtScalar y) { return {std::move(x), std::move(y)}; }

inline const ExtScalar& s3() {
  static const ExtScalar v = ExtScalar::sqrt3();
  return v;
}

}  // namespace detail

/// Canonical representative. Rectangle needs `ratio` (height over width).
inline Polygon canonical_polygon(FamilyTag tag, const std::optional<ExtScalar>& ratio = std::nullopt) {
  using detail::pt;
  const ExtScalar& r3 = detail::s3();
  const ExtScalar half(Rational(1, 2));
  switch (tag) {
    case FamilyTag::Equilateral:
      return Polygon::make({pt(0, 0), pt(2, 0), pt(1, r3)});
    case FamilyTag::ThirtyRight:
      return Polygon::make({pt(0, 0), pt(r3, 0), pt(0, 1)});
    case FamilyTag::IsoscelesRight:
      return Polygon::make({pt(0, 0), pt(1, 0), pt(0, 1)});
    case FamilyTag::OneTwentyIsosceles:
      return Polygon::make({pt(0, 0), pt(2 * r3, 0), pt(r3, 1)});
    case FamilyTag::Rectangle: {
      if (!ratio) throw missing_parameter("Rectangle needs an aspect ratio");
      if (ratio->sign() <= 0) throw argument_out_of_range("Rectangle aspect ratio must be positive");
      return Polygon::make({pt(0, 0), pt(1, 0), pt(1, *ratio), pt(0, *ratio)});
    }
    case FamilyTag::SixtyRhombus:
      return Polygon::make({pt(0, 0), pt(1, 0), pt(ExtScalar(Rational(3, 2)), half * r3), pt(half, half * r3)});
    case FamilyTag::Kite609012090:
      return Polygon::make({pt(0, 0), pt(3, -r3), pt(4, 0), pt(3, r3)});
    case FamilyTag::RegularHexagon:
      return Polygon::make({pt(2, 0), pt(1, r3), pt(-1, r3), pt(-2, 0), pt(-1, -r3), pt(1, -r3)});
  }
  throw argument_out_of_range("unknown family");
}

inline Polygon canonical_polygon(const Family& f) { return canonical_polygon(f.tag, f.ratio); }

namespace detail {

// Rotation k such that seq[(k + i) % n] == pattern[i] for all i.
inline std::optional<std::size_t> cyclic_match(const std::vector<int>& seq, const std::vector<int>& pattern) {
  const std::size_t n = seq.size();
  if (pattern.size() != n) return std::nullopt;
  for (std::size_t k = 0; k < n; ++k) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = seq[(k + i) % n] == pattern[i];
    if (ok) return k;
  }
  return std::nullopt;
}

inline std::optional<Family> match_triangle(const std::vector<int>& angles) {
  std::vector<int> s = angles;
  std::sort(s.begin(), s.end());
  if (s == std::vector<int>{60, 60, 60}) return Family{FamilyTag::Equilateral, {}};
  if (s == std::vector<int>{30, 60, 90}) return Family{FamilyTag::ThirtyRight, {}};
  if (s == std::vector<int>{45, 45, 90}) return Family{FamilyTag::IsoscelesRight, {}};
  if (s == std::vector<int>{30, 30, 120}) return Family{FamilyTag::OneTwentyIsosceles, {}};
  return std::nullopt;
}

inline std::optional<Family> match_quadrilateral(const Polygon& p, const std::vector<int>& angles) {
  std::array<ExtScalar, 4> len2;
  for (std::size_t i = 0; i < 4; ++i) len2[i] = squared_length(p.edge(i));
  if (cyclic_match(angles, {90, 90, 90, 90})) {
    // Perpendicular edges: e1 = ratio * rot90(e0) with ratio = cross(e0, e1) / |e0|^2.
    ExtScalar r = cross(p.edge(0), p.edge(1)) / len2[0];
    if (compare(r, ExtScalar(1)) > 0) r = r.inv();
    return Family::rectangle(r);
  }
  if (cyclic_match(angles, {60, 120, 60, 120})) {
    if (len2[0] == len2[1] && len2[1] == len2[2] && len2[2] == len2[3]) return Family{FamilyTag::SixtyRhombus, {}};
    return std::nullopt;
  }
  if (auto k = cyclic_match(angles, {60, 90, 120, 90})) {
    // Edge k leaves the 60 vertex; edges k+1 and k+2 meet at the 120 vertex.
    const ExtScalar& long_a = len2[*k];
    const ExtScalar& short_a = len2[(*k + 1) % 4];
    const ExtScalar& short_b = len2[(*k + 2) % 4];
    const ExtScalar& long_b = len2[(*k + 3) % 4];
    if (long_a == long_b && short_a == short_b && long_a == 3 * short_a)
      return Family{FamilyTag::Kite609012090, {}};
  }
  return std::nullopt;
}

inline std::optional<Family> match_hexagon(const Polygon& p, const std::vector<int>& angles) {
  if (std::any_of(angles.begin(), angles.end(), [](int a) { return a != 120; })) return std::nullopt;
  const ExtScalar first = squared_length(p.edge(0));
  for (std::size_t i = 1; i < 6; ++i) {
    if (squared_length(p.edge(i)) != first) return std::nullopt;
  }
  return Family{FamilyTag::RegularHexagon, {}};
}

}  // namespace detail

/// Decides which family, if any, a polygon belongs to.
///
/// Steps, in order: every interior angle must be one of 30, 45, 60, 90, 120;
/// the edge count must be 3, 4 or 6; every 120 degree vertex must be
/// symmetric about its angle bisector; finally angles and squared side
/// lengths are matched against the eight families.
inline ClassifyResult classify(const Polygon& p) {
  auto angles = interior_angles(p);
  if (!angles) return Rejection{RejectReason::AngleSet, "an interior angle is not a multiple of 15 degrees"};
  for (std::size_t i = 0; i < angles->size(); ++i) {
    const int a = (*angles)[i];
    if (std::find(kAllowedAngles.begin(), kAllowedAngles.end(), a) == kAllowedAngles.end())
      return Rejection{RejectReason::AngleSet,
                       "interior angle " + std::to_string(a) + " at vertex " + std::to_string(i) +
                           " is not in {30, 45, 60, 90, 120}"};
  }
  const std::size_t n = p.size();
  if (n != 3 && n != 4 && n != 6) {
    std::string why = std::to_string(n) + " edges: ";
    if (n > 6) {
      why += "at most 6 edges are possible";
    } else if (n == 5) {
      why += "pentagons admit no family (no solution without 120 degree angles; no pentagonal edge tiling)";
    }
    return Rejection{RejectReason::EdgeCount, why};
  }
  for (std::size_t i = 0; i < n; ++i) {
    if ((*angles)[i] == 120 && !has_bisector_symmetry(p, i))
      return Rejection{RejectReason::Kaleidoscope,
                       "120 degree vertex " + std::to_string(i) + " is not symmetric about its bisector"};
  }
  std::optional<Family> f;
  if (n == 3) f = detail::match_triangle(*angles);
  if (n == 4) f = detail::match_quadrilateral(p, *angles);
  if (n == 6) f = detail::match_hexagon(p, *angles);
  if (f) return *f;
  return Rejection{RejectReason::NoFamily, "angles and side ratios match none of the eight families"};
}

}  // namespace edgetess
