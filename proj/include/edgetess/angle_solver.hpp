#pragma once

// Integer enumeration of interior-angle counts for polygons built from the
// angles 30, 45, 60, 90 (and 120, which the linear system leaves out).

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "edgetess/errors.hpp"

namespace edgetess {

/// Counts of 30, 45, 60 and 90 degree angles for an e-gon.
struct AngleSolution {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;
  int e = 0;

  bool satisfies_system() const {
    return 30 * a + 45 * b + 60 * c + 90 * d == 180 * (e - 2) && a + b + c + d == e;
  }

  std::array<int, 4> tuple() const { return {a, b, c, d}; }

  friend auto operator<=>(const AngleSolution&, const AngleSolution&) = default;
};

using IntTuple4 = std::array<int, 4>;

inline constexpr std::array<int, 5> kAllowedAngles{30, 45, 60, 90, 120};

/// Multiset of interior angles drawn from kAllowedAngles.
struct AngleMultiset {
  std::map<int, int> counts;  // degree -> multiplicity, every allowed degree present
  int e = 0;

  /// Angles in ascending order with repetition.
  std::vector<int> sorted_angles() const {
    std::vector<int> out;
    for (const auto& [deg, n] : counts)
      for (int i = 0; i < n; ++i) out.push_back(deg);
    return out;
  }

  int count(int degrees) const {
    auto it = counts.find(degrees);
    return it == counts.end() ? 0 : it->second;
  }

  bool operator==(const AngleMultiset& o) const { return e == o.e && sorted_angles() == o.sorted_angles(); }
  bool operator<(const AngleMultiset& o) const {
    if (e != o.e) return e < o.e;
    return sorted_angles() < o.sorted_angles();
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [deg, n] : counts) {
      if (n == 0) continue;
      if (!first) s += ", ";
      first = false;
      s += std::to_string(deg) + "x" + std::to_string(n);
    }
    return s + "}";
  }
};

/// Largest e with 180(e - 2) <= 120 e, found by scanning upward.
inline int max_edge_count() {
  int e = 3;
  while (180 * (e + 1 - 2) <= 120 * (e + 1)) ++e;
  return e;
}

namespace detail {
inline void check_edge_count(int e) {
  if (e < 3 || e > 6)
    throw argument_out_of_range("edge count " + std::to_string(e) + " outside [3, 6]");
}
}  // namespace detail

/// All nonnegative solutions for edge count e, by exhaustive search,
/// sorted lexicographically by (a, b, c, d).
inline std::vector<AngleSolution> solve_system(int e) {
  detail::check_edge_count(e);
  std::vector<AngleSolution> out;
  for (int a = 0; a <= e; ++a)
    for (int b = 0; b <= e; ++b)
      for (int c = 0; c <= e; ++c)
        for (int d = 0; d <= e; ++d) {
          AngleSolution s{a, b, c, d, e};
          if (s.satisfies_system()) out.push_back(s);
        }
  return out;
}

/// General triangle solution s(1,-2,1,0) + t(3,-4,0,1) + (-3,6,0,0).
inline IntTuple4 param_solution_triangle(int s, int t) {
  return {s + 3 * t - 3, -2 * s - 4 * t + 6, s, t};
}

/// General quadrilateral solution s(1,-2,1,0) + t(3,-4,0,1) + (-12,16,0,0).
inline IntTuple4 param_solution_quad(int s, int t) {
  return {s + 3 * t - 12, -2 * s - 4 * t + 16, s, t};
}

/// Multisets over {30, 45, 60, 90, 120} of size e with angle sum 180(e - 2).
inline std::vector<AngleMultiset> enumerate_multisets(int e) {
  detail::check_edge_count(e);
  std::vector<AngleMultiset> out;
  const int target = 180 * (e - 2);
  std::array<int, 5> n{};
  for (n[0] = 0; n[0] <= e; ++n[0])
    for (n[1] = 0; n[0] + n[1] <= e; ++n[1])
      for (n[2] = 0; n[0] + n[1] + n[2] <= e; ++n[2])
        for (n[3] = 0; n[0] + n[1] + n[2] + n[3] <= e; ++n[3]) {
          n[4] = e - n[0] - n[1] - n[2] - n[3];
          int sum = 0;
          for (std::size_t i = 0; i < 5; ++i) sum += n[i] * kAllowedAngles[i];
          if (sum != target) continue;
          AngleMultiset m;
          m.e = e;
          for (std::size_t i = 0; i < 5; ++i) m.counts[kAllowedAngles[i]] = n[i];
          out.push_back(std::move(m));
        }
  std::sort(out.begin(), out.end());
  return out;
}

/// The multiset an AngleSolution describes (no 120 degree angles).
inline AngleMultiset to_multiset(const AngleSolution& s) {
  AngleMultiset m;
  m.e = s.e;
  m.counts = {{30, s.a}, {45, s.b}, {60, s.c}, {90, s.d}, {120, 0}};
  return m;
}

}  // namespace edgetess
