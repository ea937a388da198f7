// Copyright 2026 The ZebraT Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zebrat/grid_search.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.h"

namespace zebrat {
namespace {

CellIndex RandomFreeCell(const OccupancyGrid& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> col(0, g.width() - 1), row(0, g.height() - 1);
  for (;;) {
    const CellIndex c{col(rng), row(rng)};
    if (!g.Occupied(c)) return c;
  }
}

bool ValidPath(const OccupancyGrid& g, const GridPath& p, const CellIndex& s,
               const CellIndex& t) {
  if (p.cells.empty() || !(p.cells.front() == s) || !(p.cells.back() == t)) {
    return false;
  }
  for (std::size_t i = 1; i < p.cells.size(); ++i) {
    const int dc = p.cells[i].col - p.cells[i - 1].col;
    const int dr = p.cells[i].row - p.cells[i - 1].row;
    if (std::abs(dc) > 1 || std::abs(dr) > 1 || (dc == 0 && dr == 0)) return false;
    if (g.Occupied(p.cells[i])) return false;
    if (dc != 0 && dr != 0 &&
        (g.Occupied(p.cells[i - 1].col + dc, p.cells[i - 1].row) ||
         g.Occupied(p.cells[i - 1].col, p.cells[i - 1].row + dr))) {
      return false;
    }
  }
  return true;
}

TEST(Search, EmptyGridDiagonal) {
  const OccupancyGrid g(10, 10, 0.5);
  const SearchResult r = AStar(g, {0, 0}, {9, 9});
  ASSERT_TRUE(r.path);
  EXPECT_NEAR(r.path->cost, 9 * std::sqrt(2.0) * 0.5, 1e-12);
  EXPECT_EQ(r.path->cells.size(), 10u);
}

TEST(Search, StartEqualsGoal) {
  const OccupancyGrid g(5, 5, 1.0);
  for (auto kind : {PlannerKind::kAStar, PlannerKind::kDijkstra}) {
    const SearchResult r = PlanPath(kind, g, {2, 2}, {2, 2});
    ASSERT_TRUE(r.path);
    EXPECT_EQ(r.path->cost, 0.0);
  }
}

TEST(Search, BlockedGoalOrWall) {
  OccupancyGrid g(7, 7, 1.0);
  for (int r = 0; r < 7; ++r) g.Set(3, r, true);
  EXPECT_FALSE(AStar(g, {0, 0}, {6, 6}).path);
  EXPECT_FALSE(Dijkstra(g, {0, 0}, {6, 6}).path);
  EXPECT_FALSE(AStar(g, {0, 0}, {3, 3}).path);
}

TEST(Search, NoCornerCutting) {
  OccupancyGrid g(2, 2, 1.0);
  g.Set(1, 0, true);
  g.Set(0, 1, true);
  EXPECT_FALSE(AStar(g, {0, 0}, {1, 1}).path);
}

TEST(Search, OptimalAgainstBellmanFord) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const OccupancyGrid g = oracle::RandomGrid(20, 20, 0.1, 0.25, rng);
    const CellIndex s = RandomFreeCell(g, rng);
    const CellIndex t = RandomFreeCell(g, rng);
    const auto truth = oracle::BellmanFordCost(g, s, t);
    const SearchResult a = AStar(g, s, t);
    const SearchResult d = Dijkstra(g, s, t);
    ASSERT_EQ(a.path.has_value(), truth.has_value());
    ASSERT_EQ(d.path.has_value(), truth.has_value());
    if (truth) {
      EXPECT_NEAR(a.path->cost, *truth, 1e-9);
      EXPECT_NEAR(d.path->cost, *truth, 1e-9);
      EXPECT_TRUE(ValidPath(g, *a.path, s, t));
      EXPECT_TRUE(ValidPath(g, *d.path, s, t));
    }
    EXPECT_LE(a.expansions, d.expansions);
  }
}

TEST(Search, IsDeterministic) {
  std::mt19937_64 rng(5);
  const OccupancyGrid g = oracle::RandomGrid(25, 25, 0.1, 0.2, rng);
  const SearchResult a = AStar(g, {0, 0}, {24, 24});
  const SearchResult b = AStar(g, {0, 0}, {24, 24});
  ASSERT_EQ(a.path.has_value(), b.path.has_value());
  if (a.path) EXPECT_EQ(a.path->cells, b.path->cells);
  EXPECT_EQ(a.expansions, b.expansions);
}

TEST(PlannerKind, Names) {
  EXPECT_EQ(PlannerKindFromName("astar"), PlannerKind::kAStar);
  EXPECT_EQ(PlannerKindFromName("dijkstra"), PlannerKind::kDijkstra);
  EXPECT_FALSE(PlannerKindFromName("rrt"));
  EXPECT_EQ(PlannerKindName(PlannerKind::kAStar), "astar");
}

TEST(Reachable, MatchesFloodFillOracle) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const OccupancyGrid g = oracle::RandomGrid(30, 20, 0.1, 0.3, rng);
    const CellIndex s = RandomFreeCell(g, rng);
    EXPECT_EQ(ReachableMask(g, s), oracle::FloodFill(g, s));
  }
}

TEST(Inflate, MatchesBruteForceDisc) {
  std::mt19937_64 rng(21);
  const OccupancyGrid g = oracle::RandomGrid(25, 25, 0.1, 0.03, rng);
  const double radius = 0.25;
  const OccupancyGrid inflated = Inflate(g, radius);
  const double cells = radius / 0.1;
  for (int r = 0; r < 25; ++r) {
    for (int c = 0; c < 25; ++c) {
      bool expect = g.Occupied(c, r);
      for (int rr = 0; rr < 25 && !expect; ++rr) {
        for (int cc = 0; cc < 25 && !expect; ++cc) {
          if (g.Occupied(cc, rr) &&
              (cc - c) * (cc - c) + (rr - r) * (rr - r) <= cells * cells + 1e-9) {
            expect = true;
          }
        }
      }
      EXPECT_EQ(inflated.Occupied(c, r), expect) << c << "," << r;
    }
  }
}

TEST(Inflate, ZeroFootprintIsIdentity) {
  std::mt19937_64 rng(2);
  const OccupancyGrid g = oracle::RandomGrid(10, 10, 0.1, 0.2, rng);
  EXPECT_EQ(Inflate(g, Footprint{0.0, 0.0, 0.0}), g);
  EXPECT_EQ(Inflate(g, 0.0), g);
}

}  // namespace
}  // namespace zebrat
