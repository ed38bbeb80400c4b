#pragma once

// Fixed set of convex polygons that are NOT in any family. Each must be
// rejected by the classifier and refuted by the tiling engine.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "edgetess/errors.hpp"
#include "edgetess/ext_scalar.hpp"
#include "edgetess/polygon.hpp"

namespace edgetess {

struct CorpusEntry {
  std::string name;
  Polygon polygon;
  /// Sorted interior angles when all are multiples of 15, else nullopt.
  std::optional<std::vector<int>> angles;
};

namespace detail {

inline CorpusEntry checked_entry(std::string name, std::vector<Point2> verts,
                                 std::optional<std::vector<int>> expected) {
  Polygon p = Polygon::from_boundary(std::move(verts));
  auto got = interior_angles(p);
  if (got) std::sort(got->begin(), got->end());
  if (got != expected) throw error("corpus polygon '" + name + "' does not have its intended angles");
  return {std::move(name), std::move(p), std::move(expected)};
}

}  // namespace detail

/// House-shaped pentagon with angles (90, 90, 120, 120, 120).
inline CorpusEntry house_pentagon() {
  const ExtScalar apex_y = ExtScalar(1) + ExtScalar(0, 0, Rational(1, 3), 0);
  return detail::checked_entry("house-pentagon-90-90-120-120-120",
                               {{0, 0}, {2, 0}, {2, 1}, {1, apex_y}, {0, 1}},
                               std::vector<int>{90, 90, 120, 120, 120});
}

inline std::vector<CorpusEntry> refutation_corpus() {
  const ExtScalar r3 = ExtScalar::sqrt3();
  std::vector<CorpusEntry> out;
  out.push_back(detail::checked_entry("triangle-45-60-75", {{0, 0}, {ExtScalar(1) + r3, 0}, {r3, r3}},
                                      std::vector<int>{45, 60, 75}));
  out.push_back(detail::checked_entry("right-triangle-3-4-5", {{0, 0}, {4, 0}, {0, 3}}, std::nullopt));
  out.push_back(detail::checked_entry("triangle-0-0-4-0-1-2", {{0, 0}, {4, 0}, {1, 2}}, std::nullopt));
  out.push_back(house_pentagon());
  out.push_back(detail::checked_entry("rhombus-30-150", {{0, 0}, {2, 0}, {ExtScalar(2) + r3, 1}, {r3, 1}},
                                      std::vector<int>{30, 30, 150, 150}));
  // 60-90-120-90 with legs 3 and 4 from the 60 vertex, so the 120 vertex is lopsided.
  out.push_back(detail::checked_entry(
      "asymmetric-60-90-120-90",
      {{0, 0},
       {ExtScalar(0, 0, Rational(3, 2), 0), ExtScalar(Rational(-3, 2))},
       {ExtScalar(0, 0, Rational(7, 3), 0), 1},
       {2 * r3, 2}},
      std::vector<int>{60, 90, 90, 120}));
  return out;
}

}  // namespace edgetess
