#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "edgetess/angle_solver.hpp"

using namespace edgetess;

namespace {

std::vector<IntTuple4> tuples(const std::vector<AngleSolution>& sols) {
  std::vector<IntTuple4> out;
  for (const auto& s : sols) out.push_back(s.tuple());
  return out;
}

// Every ordered e-sequence of allowed angles, deduplicated after sorting.
std::set<std::vector<int>> brute_force_multisets(int e, bool with_120) {
  std::set<std::vector<int>> out;
  std::vector<int> seq(static_cast<std::size_t>(e));
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == seq.size()) {
      int sum = 0;
      for (int a : seq) sum += a;
      if (sum != 180 * (e - 2)) return;
      std::vector<int> sorted = seq;
      std::sort(sorted.begin(), sorted.end());
      out.insert(sorted);
      return;
    }
    for (int a : {30, 45, 60, 90, 120}) {
      if (a == 120 && !with_120) continue;
      seq[i] = a;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST(MaxEdgeCount, ScansToSix) {
  EXPECT_EQ(max_edge_count(), 6);
  EXPECT_LE(180 * (6 - 2), 120 * 6);
  EXPECT_GT(180 * (7 - 2), 120 * 7);
}

TEST(SolveSystem, Examples) {
  EXPECT_EQ(tuples(solve_system(3)), (std::vector<IntTuple4>{{0, 0, 3, 0}, {0, 2, 0, 1}, {1, 0, 1, 1}}));
  EXPECT_EQ(tuples(solve_system(4)), (std::vector<IntTuple4>{{0, 0, 0, 4}}));
  EXPECT_TRUE(solve_system(5).empty());
  EXPECT_TRUE(solve_system(6).empty());
  EXPECT_THROW(solve_system(2), argument_out_of_range);
  EXPECT_THROW(solve_system(7), argument_out_of_range);
}

TEST(SolveSystem, SolutionsSatisfyBothEquationsAndAreSorted) {
  for (int e = 3; e <= 6; ++e) {
    auto sols = solve_system(e);
    EXPECT_TRUE(std::is_sorted(sols.begin(), sols.end()));
    for (const auto& s : sols) {
      EXPECT_EQ(30 * s.a + 45 * s.b + 60 * s.c + 90 * s.d, 180 * (e - 2));
      EXPECT_EQ(s.a + s.b + s.c + s.d, e);
    }
    // Matches the brute-force multiset enumeration without 120.
    EXPECT_EQ(sols.size(), brute_force_multisets(e, false).size());
  }
}

TEST(ParamSolution, Triangle) {
  EXPECT_EQ(param_solution_triangle(3, 0), (IntTuple4{0, 0, 3, 0}));
  EXPECT_EQ(param_solution_triangle(0, 1), (IntTuple4{0, 2, 0, 1}));
  EXPECT_EQ(param_solution_triangle(1, 1), (IntTuple4{1, 0, 1, 1}));
}

TEST(ParamSolution, Quadrilateral) {
  EXPECT_EQ(param_solution_quad(0, 4), (IntTuple4{0, 0, 0, 4}));
  EXPECT_EQ(param_solution_quad(0, 0), (IntTuple4{-12, 16, 0, 0}));
  EXPECT_EQ(param_solution_quad(1, 0), (IntTuple4{-11, 14, 1, 0}));
}

TEST(ParamSolution, EveryPointSolvesTheSystem) {
  for (int s = -10; s <= 10; ++s) {
    for (int t = -10; t <= 10; ++t) {
      auto tri = param_solution_triangle(s, t);
      EXPECT_EQ(30 * tri[0] + 45 * tri[1] + 60 * tri[2] + 90 * tri[3], 180);
      EXPECT_EQ(tri[0] + tri[1] + tri[2] + tri[3], 3);
      auto quad = param_solution_quad(s, t);
      EXPECT_EQ(30 * quad[0] + 45 * quad[1] + 60 * quad[2] + 90 * quad[3], 360);
      EXPECT_EQ(quad[0] + quad[1] + quad[2] + quad[3], 4);
    }
  }
}

TEST(EnumerateMultisets, Examples) {
  auto tri = enumerate_multisets(3);
  EXPECT_TRUE(std::any_of(tri.begin(), tri.end(),
                          [](const AngleMultiset& m) { return m.sorted_angles() == std::vector<int>{30, 30, 120}; }));
  auto hex = enumerate_multisets(6);
  ASSERT_EQ(hex.size(), 1u);
  EXPECT_EQ(hex[0].sorted_angles(), (std::vector<int>(6, 120)));
  auto pent = enumerate_multisets(5);
  EXPECT_TRUE(std::any_of(pent.begin(), pent.end(), [](const AngleMultiset& m) {
    return m.sorted_angles() == std::vector<int>{90, 90, 120, 120, 120};
  }));
  EXPECT_THROW(enumerate_multisets(7), argument_out_of_range);
}

TEST(EnumerateMultisets, MatchesBruteForce) {
  for (int e = 3; e <= 6; ++e) {
    std::set<std::vector<int>> got;
    auto ms = enumerate_multisets(e);
    EXPECT_TRUE(std::is_sorted(ms.begin(), ms.end()));
    for (const auto& m : ms) {
      EXPECT_EQ(static_cast<int>(m.sorted_angles().size()), e);
      got.insert(m.sorted_angles());
    }
    EXPECT_EQ(got.size(), ms.size());
    EXPECT_EQ(got, brute_force_multisets(e, true)) << "e=" << e;
  }
}

TEST(EnumerateMultisets, SupersetOfSystemSolutions) {
  for (int e = 3; e <= 6; ++e) {
    auto ms = enumerate_multisets(e);
    auto sols = solve_system(e);
    for (const auto& s : sols) {
      auto m = to_multiset(s);
      EXPECT_EQ(m.count(120), 0);
      EXPECT_NE(std::find(ms.begin(), ms.end(), m), ms.end());
    }
    const bool uses_120 = std::any_of(ms.begin(), ms.end(), [](const AngleMultiset& m) { return m.count(120) > 0; });
    EXPECT_EQ(ms.size() > sols.size(), uses_120);
  }
}
