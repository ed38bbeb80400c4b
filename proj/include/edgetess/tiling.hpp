#pragma once

// Reflection-closure expansion of a seed polygon and exact verification
// that the resulting finite patch is locally an edge-to-edge tiling.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "edgetess/errors.hpp"
#include "edgetess/ext_scalar.hpp"
#include "edgetess/geometry.hpp"
#include "edgetess/polygon.hpp"

namespace edgetess {

/// Vertex list normalized under rotation and reversal to its lexicographic minimum.
using TileKey = std::vector<Point2>;

struct TileKeyLess {
  bool operator()(const TileKey& a, const TileKey& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), PointLess{});
  }
};

inline TileKey canonical_key(const std::vector<Point2>& verts) {
  const std::size_t n = verts.size();
  TileKey best;
  TileKey cand(n);
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t start = 0; start < n; ++start) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = dir == 0 ? (start + i) % n : (start + n - i) % n;
        cand[i] = verts[j];
      }
      if (best.empty() || TileKeyLess{}(cand, best)) best = cand;
    }
  }
  return best;
}

struct Tile {
  Isometry iso;               // seed -> tile
  std::vector<Point2> verts;  // iso applied to the seed vertices, in seed order
  int generation = 0;
  TileKey key;

  /// Interior angle at position i, accounting for orientation reversal.
  std::optional<int> angle_at(std::size_t i) const {
    const std::size_t n = verts.size();
    const Vec2 to_next = verts[(i + 1) % n] - verts[i];
    const Vec2 to_prev = verts[(i + n - 1) % n] - verts[i];
    return iso.parity() > 0 ? classify_angle(to_next, to_prev) : classify_angle(to_prev, to_next);
  }

  /// Vertices in counterclockwise order.
  std::vector<Point2> ccw_vertices() const {
    std::vector<Point2> v = verts;
    if (iso.parity() < 0) std::reverse(v.begin(), v.end());
    return v;
  }
};

inline Tile make_tile(const Isometry& iso, const Polygon& seed, int generation) {
  Tile t;
  t.iso = iso;
  t.generation = generation;
  t.verts.reserve(seed.size());
  for (const auto& v : seed.vertices()) t.verts.push_back(iso.apply(v));
  t.key = canonical_key(t.verts);
  return t;
}

/// Mirror image of `t` in its edge (i, i+1).
inline Tile reflect_in_edge(const Tile& t, std::size_t edge_index_in_tile, const Polygon& seed) {
  const std::size_t n = t.verts.size();
  if (edge_index_in_tile >= n)
    throw index_error("edge index " + std::to_string(edge_index_in_tile) + " out of range");
  const Isometry mirror = reflection_across(t.verts[edge_index_in_tile], t.verts[(edge_index_in_tile + 1) % n]);
  return make_tile(compose(mirror, t.iso), seed, t.generation + 1);
}

/// Unordered exact endpoint pair, smaller endpoint first.
using EdgeKey = std::pair<Point2, Point2>;

inline EdgeKey make_edge_key(const Point2& a, const Point2& b) {
  return PointLess{}(b, a) ? EdgeKey{b, a} : EdgeKey{a, b};
}

struct EdgeKeyLess {
  bool operator()(const EdgeKey& a, const EdgeKey& b) const {
    auto c = structural_compare(a.first, b.first);
    if (c != 0) return c < 0;
    return structural_compare(a.second, b.second) < 0;
  }
};

/// Position of a vertex within a tile.
struct Incidence {
  std::size_t tile;
  std::size_t position;
  friend bool operator==(const Incidence&, const Incidence&) = default;
};

inline constexpr int kMaxGenerations = 8;

struct Patch {
  Polygon seed;
  std::vector<Tile> tiles;  // sorted by key
  std::map<EdgeKey, std::vector<std::size_t>, EdgeKeyLess> edge_index;
  std::map<Point2, std::vector<Incidence>, PointLess> vertex_index;
  int generations = 0;

  std::optional<std::size_t> find(const TileKey& key) const {
    auto it = std::lower_bound(tiles.begin(), tiles.end(), key,
                               [](const Tile& t, const TileKey& k) { return TileKeyLess{}(t.key, k); });
    if (it == tiles.end() || it->key != key) return std::nullopt;
    return static_cast<std::size_t>(it - tiles.begin());
  }
};

struct ExpandOptions {
  /// Shuffle the order in which frontier tiles are processed. The result
  /// must not depend on it; exposed so that can be checked.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Breadth-first reflection closure of `seed` to depth `generations`.
/// Overlapping tiles are kept; detecting them is verify's job.
inline Patch expand(const Polygon& seed, int generations, const ExpandOptions& opts = {}) {
  if (generations < 0 || generations > kMaxGenerations)
    throw argument_out_of_range("generations must lie in [0, " + std::to_string(kMaxGenerations) + "]");

  std::map<TileKey, Tile, TileKeyLess> seen;
  std::vector<const Tile*> frontier;
  {
    Tile root = make_tile(Isometry::identity(), seed, 0);
    auto [it, _] = seen.emplace(root.key, std::move(root));
    frontier.push_back(&it->second);
  }
  std::optional<std::mt19937_64> rng;
  if (opts.shuffle_seed) rng.emplace(*opts.shuffle_seed);

  for (int g = 1; g <= generations; ++g) {
    if (rng) std::shuffle(frontier.begin(), frontier.end(), *rng);
    std::vector<const Tile*> next;
    for (const Tile* t : frontier) {
      std::vector<std::size_t> edges(seed.size());
      std::iota(edges.begin(), edges.end(), std::size_t{0});
      if (rng) std::shuffle(edges.begin(), edges.end(), *rng);
      for (std::size_t e : edges) {
        Tile child = reflect_in_edge(*t, e, seed);
        if (seen.count(child.key)) continue;
        TileKey key = child.key;
        auto [it, _] = seen.emplace(std::move(key), std::move(child));
        next.push_back(&it->second);
      }
    }
    frontier = std::move(next);
  }

  Patch patch{seed, {}, {}, {}, generations};
  patch.tiles.reserve(seen.size());
  for (auto& [key, tile] : seen) patch.tiles.push_back(std::move(tile));

  for (std::size_t ti = 0; ti < patch.tiles.size(); ++ti) {
    const auto& verts = patch.tiles[ti].verts;
    const std::size_t n = verts.size();
    for (std::size_t i = 0; i < n; ++i) {
      patch.edge_index[make_edge_key(verts[i], verts[(i + 1) % n])].push_back(ti);
      patch.vertex_index[verts[i]].push_back({ti, i});
    }
  }
  return patch;
}

struct BadEdge {
  EdgeKey edge;
  std::size_t incident = 0;
};

struct VertexDefect {
  Point2 vertex;
  std::optional<int> angle_sum;  // nullopt when some incident angle is not a multiple of 15
};

struct VerificationReport {
  int generations = 0;
  std::size_t tile_count = 0;
  std::size_t settled_tile_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> overlap_pairs;  // tile indices, i < j
  std::vector<BadEdge> bad_edges;
  std::vector<VertexDefect> vertex_defects;
  std::map<Point2, int, PointLess> vertex_orders;  // settled vertices only
  bool pass = false;

  std::map<int, std::size_t> order_histogram() const {
    std::map<int, std::size_t> h;
    for (const auto& [v, n] : vertex_orders) ++h[n];
    return h;
  }
};

namespace detail {

struct Box {
  ExtScalar xmin, xmax, ymin, ymax;
};

inline Box bounding_box(const std::vector<Point2>& v) {
  Box b{v[0].x, v[0].x, v[0].y, v[0].y};
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (compare(v[i].x, b.xmin) < 0) b.xmin = v[i].x;
    if (compare(v[i].x, b.xmax) > 0) b.xmax = v[i].x;
    if (compare(v[i].y, b.ymin) < 0) b.ymin = v[i].y;
    if (compare(v[i].y, b.ymax) > 0) b.ymax = v[i].y;
  }
  return b;
}

// Some edge line of `a` (counterclockwise) has all of `b` on its closed outer side.
inline bool has_separating_edge(const std::vector<Point2>& a, const std::vector<Point2>& b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p = a[i];
    const Point2& q = a[(i + 1) % n];
    const bool all_outside = std::all_of(b.begin(), b.end(), [&](const Point2& r) { return orientation(p, q, r) <= 0; });
    if (all_outside) return true;
  }
  return false;
}

}  // namespace detail

/// Interiors of two counterclockwise convex polygons intersect (separating axis test).
inline bool interiors_intersect(const std::vector<Point2>& a, const std::vector<Point2>& b) {
  return !detail::has_separating_edge(a, b) && !detail::has_separating_edge(b, a);
}

/// Checks a patch for overlaps, unmatched edges and vertex angle defects.
///
/// A tile is settled when its generation is below the patch depth (all its
/// edges were reflected). A vertex is settled when every tile incident to
/// it is settled; the fan around such a vertex is closed under reflection
/// in the edges through it, so its angle sum must be exactly 360.
inline VerificationReport verify(const Patch& patch) {
  VerificationReport r;
  r.generations = patch.generations;
  r.tile_count = patch.tiles.size();
  const auto& tiles = patch.tiles;
  const int last_settled = patch.generations - 1;
  auto settled = [&](std::size_t ti) { return tiles[ti].generation <= last_settled; };
  for (std::size_t i = 0; i < tiles.size(); ++i)
    if (settled(i)) ++r.settled_tile_count;

  // Overlaps: sweep on exact bounding boxes, then the exact separating axis test.
  std::vector<std::vector<Point2>> ccw;
  std::vector<detail::Box> boxes;
  ccw.reserve(tiles.size());
  boxes.reserve(tiles.size());
  for (const auto& t : tiles) {
    ccw.push_back(t.ccw_vertices());
    boxes.push_back(detail::bounding_box(t.verts));
  }
  std::vector<std::size_t> order(tiles.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return compare(boxes[a].xmin, boxes[b].xmin) < 0; });
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    const std::size_t i = order[oi];
    for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
      const std::size_t j = order[oj];
      if (compare(boxes[j].xmin, boxes[i].xmax) >= 0) break;
      if (compare(boxes[j].ymin, boxes[i].ymax) >= 0 || compare(boxes[i].ymin, boxes[j].ymax) >= 0) continue;
      if (interiors_intersect(ccw[i], ccw[j])) r.overlap_pairs.emplace_back(std::min(i, j), std::max(i, j));
    }
  }
  std::sort(r.overlap_pairs.begin(), r.overlap_pairs.end());

  // Every edge of a settled tile must be shared by exactly two tiles.
  for (const auto& [edge, incident] : patch.edge_index) {
    const bool internal = std::any_of(incident.begin(), incident.end(), settled);
    if (internal && incident.size() != 2) r.bad_edges.push_back({edge, incident.size()});
  }

  // Vertex fans.
  for (const auto& [v, incidences] : patch.vertex_index) {
    const bool all_settled =
        std::all_of(incidences.begin(), incidences.end(), [&](const Incidence& in) { return settled(in.tile); });
    if (!all_settled) continue;
    r.vertex_orders[v] = static_cast<int>(incidences.size());
    std::optional<int> sum = 0;
    for (const auto& in : incidences) {
      auto a = tiles[in.tile].angle_at(in.position);
      if (!a) {
        sum.reset();
        break;
      }
      *sum += *a;
    }
    if (!sum || *sum != 360) r.vertex_defects.push_back({v, sum});
  }

  r.pass = r.overlap_pairs.empty() && r.bad_edges.empty() && r.vertex_defects.empty();
  return r;
}

/// Plain-text summary of a report.
inline std::string format_summary(const VerificationReport& r) {
  std::string s;
  s += "generations: " + std::to_string(r.generations) + "\n";
  s += "tiles: " + std::to_string(r.tile_count) + "\n";
  s += "settled tiles: " + std::to_string(r.settled_tile_count) + "\n";
  s += "settled vertices: " + std::to_string(r.vertex_orders.size()) + "\n";
  s += "overlap pairs: " + std::to_string(r.overlap_pairs.size()) + "\n";
  s += "bad edges: " + std::to_string(r.bad_edges.size()) + "\n";
  s += "vertex defects: " + std::to_string(r.vertex_defects.size()) + "\n";
  s += "vertex orders:";
  for (const auto& [order, count] : r.order_histogram()) s += " " + std::to_string(order) + "x" + std::to_string(count);
  s += "\n";
  s += std::string("verdict: ") + (r.pass ? "pass" : "fail") + "\n";
  return s;
}

/// One defect per line, tab separated, exact coordinates in `c1 c2 c3 c6` form:
///   overlap <tile i> <tile j>
///   edge <x1> <y1> <x2> <y2> <incident tiles>
///   vertex <x> <y> <angle sum | unrecognized>
inline std::string format_defects(const VerificationReport& r) {
  std::string s;
  for (const auto& [i, j] : r.overlap_pairs) s += "overlap\t" + std::to_string(i) + "\t" + std::to_string(j) + "\n";
  for (const auto& e : r.bad_edges) {
    s += "edge\t" + e.edge.first.x.to_text() + "\t" + e.edge.first.y.to_text() + "\t" + e.edge.second.x.to_text() +
         "\t" + e.edge.second.y.to_text() + "\t" + std::to_string(e.incident) + "\n";
  }
  for (const auto& d : r.vertex_defects) {
    s += "vertex\t" + d.vertex.x.to_text() + "\t" + d.vertex.y.to_text() + "\t" +
         (d.angle_sum ? std::to_string(*d.angle_sum) : std::string("unrecognized")) + "\n";
  }
  return s;
}

}  // namespace edgetess
