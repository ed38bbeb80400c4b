#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "edgetess/errors.hpp"
#include "edgetess/ext_scalar.hpp"
#include "edgetess/geometry.hpp"

namespace edgetess {

namespace detail {

inline bool on_segment(const Point2& a, const Point2& b, const Point2& p) {
  return compare(min_value(a.x, b.x), p.x) <= 0 && compare(p.x, max_value(a.x, b.x)) <= 0 &&
         compare(min_value(a.y, b.y), p.y) <= 0 && compare(p.y, max_value(a.y, b.y)) <= 0;
}

// Closed segments ab and cd share at least one point.
inline bool segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

inline ExtScalar twice_signed_area(const std::vector<Point2>& v) {
  ExtScalar s(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2& p = v[i];
    const Point2& q = v[(i + 1) % v.size()];
    s += p.x * q.y - q.x * p.y;
  }
  return s;
}

}  // namespace detail

/// Strictly convex, simple, counterclockwise polygon with exact vertices.
class Polygon {
 public:
  /// Validates the vertex list as given; it must already be counterclockwise.
  static Polygon make(std::vector<Point2> vertices) {
    validate(vertices);
    Polygon p;
    p.vertices_ = std::move(vertices);
    return p;
  }

  /// Accepts either orientation and stores the counterclockwise one.
  static Polygon from_boundary(std::vector<Point2> vertices) {
    if (vertices.size() >= 3 && detail::twice_signed_area(vertices).sign() < 0)
      std::reverse(vertices.begin(), vertices.end());
    return make(std::move(vertices));
  }

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }
  const Point2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  /// Edge i runs from vertex i to vertex i+1.
  Vec2 edge(std::size_t i) const { return vertex(i + 1) - vertex(i); }

  ExtScalar twice_area() const { return detail::twice_signed_area(vertices_); }

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  Polygon() = default;

  static void validate(const std::vector<Point2>& v) {
    const std::size_t n = v.size();
    if (n < 3) throw invalid_polygon("polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] == v[(i + 1) % n]) throw invalid_polygon("consecutive vertices coincide");
    }
    if (detail::twice_signed_area(v).sign() <= 0)
      throw invalid_polygon("polygon is not counterclockwise");
    for (std::size_t i = 0; i < n; ++i) {
      const int turn = orientation(v[i], v[(i + 1) % n], v[(i + 2) % n]);
      if (turn == 0) throw invalid_polygon("straight angle at vertex " + std::to_string((i + 1) % n));
      if (turn < 0) throw invalid_polygon("polygon is not convex at vertex " + std::to_string((i + 1) % n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;  // adjacent through the wraparound
        if (detail::segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
          throw invalid_polygon("boundary is not simple");
      }
    }
  }

  std::vector<Point2> vertices_;
};

/// Interior angle at vertex i, or nullopt when it is not a multiple of 15.
inline std::optional<int> interior_angle(const Polygon& p, std::size_t i) {
  const Point2& v = p.vertex(i);
  const Point2& next = p.vertex(i + 1);
  const Point2& prev = p.vertex(i + p.size() - 1);
  return classify_angle(next - v, prev - v);
}

/// Per-vertex interior angles; nullopt if any vertex is unrecognized.
inline std::optional<std::vector<int>> interior_angles(const Polygon& p) {
  std::vector<int> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto a = interior_angle(p, i);
    if (!a) return std::nullopt;
    out.push_back(*a);
  }
  return out;
}

/// Whether the mirror swapping the two edges at vertex i maps the vertex
/// set onto itself. Unequal incident edge lengths rule it out immediately.
inline bool has_bisector_symmetry(const Polygon& p, std::size_t i) {
  if (i >= p.size()) throw index_error("vertex index " + std::to_string(i) + " out of range");
  const Point2& v = p.vertex(i);
  const Vec2 u = p.vertex(i + 1) - v;
  const Vec2 w = p.vertex(i + p.size() - 1) - v;
  if (squared_length(u) != squared_length(w)) return false;
  const Isometry mirror = reflection_across(v, v + (u + w));
  std::vector<Point2> image;
  image.reserve(p.size());
  for (const auto& q : p.vertices()) image.push_back(mirror.apply(q));
  std::vector<Point2> original = p.vertices();
  std::sort(image.begin(), image.end(), PointLess{});
  std::sort(original.begin(), original.end(), PointLess{});
  return image == original;
}

/// Reads the polygon file format: one vertex per line, eight rational
/// tokens (x as c1 c2 c3 c6, then y likewise); `#` starts a comment line.
inline std::vector<Point2> parse_polygon_vertices(std::istream& in) {
  std::vector<Point2> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.size() != 8)
      throw parse_error(lineno, "expected 8 rational tokens, found " + std::to_string(toks.size()));
    try {
      out.push_back({ExtScalar::from_tokens(toks[0], toks[1], toks[2], toks[3]),
                     ExtScalar::from_tokens(toks[4], toks[5], toks[6], toks[7])});
    } catch (const parse_error& e) {
      throw parse_error(lineno, e.what());
    }
  }
  return out;
}

inline Polygon parse_polygon(std::istream& in) {
  auto verts = parse_polygon_vertices(in);
  try {
    return Polygon::from_boundary(std::move(verts));
  } catch (const invalid_polygon& e) {
    throw invalid_polygon(std::string("invalid polygon: ") + e.what());
  }
}

inline Polygon load_polygon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw file_not_found(path);
  return parse_polygon(in);
}

inline std::string format_polygon(const Polygon& p) {
  std::string out;
  for (const auto& v : p.vertices()) out += v.x.to_text() + "  " + v.y.to_text() + "\n";
  return out;
}

}  // namespace edgetess
