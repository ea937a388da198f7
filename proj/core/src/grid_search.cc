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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <tuple>

namespace zebrat {
namespace {

constexpr double kSqrt2 = 1.4142135623730951;

struct Move {
  int dc;
  int dr;
  bool diagonal;
};

constexpr Move kMoves[8] = {{1, 0, false},  {-1, 0, false}, {0, 1, false},
                            {0, -1, false}, {1, 1, true},   {1, -1, true},
                            {-1, 1, true},  {-1, -1, true}};

bool CanMove(const OccupancyGrid& grid, const CellIndex& from,
             const Move& m) {
  if (grid.Occupied(from.col + m.dc, from.row + m.dr)) return false;
  if (!m.diagonal) return true;
  return !grid.Occupied(from.col + m.dc, from.row) &&
         !grid.Occupied(from.col, from.row + m.dr);
}

double Octile(const CellIndex& a, const CellIndex& b) {
  const int dx = std::abs(a.col - b.col);
  const int dy = std::abs(a.row - b.row);
  return (std::max(dx, dy) - std::min(dx, dy)) +
         kSqrt2 * std::min(dx, dy);
}

// Best-first search shared by Dijkstra (zero heuristic) and A*.
SearchResult BestFirst(const OccupancyGrid& grid, const CellIndex& start,
                       const CellIndex& goal, bool use_heuristic) {
  SearchResult result;
  if (grid.Occupied(start) || grid.Occupied(goal)) return result;

  const std::size_t n = grid.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> g(n, kInf);
  std::vector<std::int64_t> parent(n, -1);
  std::vector<bool> closed(n, false);

  using Entry = std::tuple<double, std::size_t>;  // (priority, index)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  const std::size_t start_index = grid.Index(start);
  const std::size_t goal_index = grid.Index(goal);
  g[start_index] = 0.0;
  open.emplace(use_heuristic ? Octile(start, goal) : 0.0, start_index);

  while (!open.empty()) {
    const auto [priority, index] = open.top();
    open.pop();
    if (closed[index]) continue;
    closed[index] = true;
    ++result.expansions;
    if (index == goal_index) break;
    const CellIndex cell = grid.FromIndex(index);
    for (const Move& m : kMoves) {
      if (!CanMove(grid, cell, m)) continue;
      const CellIndex next{cell.col + m.dc, cell.row + m.dr};
      const std::size_t next_index = grid.Index(next);
      if (closed[next_index]) continue;
      const double candidate = g[index] + (m.diagonal ? kSqrt2 : 1.0);
      if (candidate < g[next_index]) {
        g[next_index] = candidate;
        parent[next_index] = static_cast<std::int64_t>(index);
        open.emplace(candidate + (use_heuristic ? Octile(next, goal) : 0.0),
                     next_index);
      }
    }
  }
  if (!closed[goal_index]) return result;

  GridPath path;
  for (std::int64_t i = static_cast<std::int64_t>(goal_index);
       i != static_cast<std::int64_t>(start_index); i = parent[i]) {
    path.cells.push_back(grid.FromIndex(static_cast<std::size_t>(i)));
  }
  if (start_index != goal_index) path.cells.push_back(start);
  std::reverse(path.cells.begin(), path.cells.end());
  if (start_index == goal_index) path.cells.clear();

  // Recompute from the move counts so equal-cost paths compare bit-exactly.
  long straight = 0;
  long diagonal = 0;
  for (std::size_t i = 1; i < path.cells.size(); ++i) {
    const bool is_diagonal = path.cells[i].col != path.cells[i - 1].col &&
                             path.cells[i].row != path.cells[i - 1].row;
    (is_diagonal ? diagonal : straight) += 1;
  }
  path.cost = (static_cast<double>(straight) +
               kSqrt2 * static_cast<double>(diagonal)) *
              grid.resolution();
  result.path = std::move(path);
  return result;
}

}  // namespace

OccupancyGrid Inflate(const OccupancyGrid& grid, double radius) {
  OccupancyGrid out = grid;
  if (!(radius > 0.0)) return out;
  const double reach = radius / grid.resolution();
  const int span = static_cast<int>(std::floor(reach));
  std::vector<std::pair<int, int>> disc;
  for (int dr = -span; dr <= span; ++dr) {
    for (int dc = -span; dc <= span; ++dc) {
      if (dc * dc + dr * dr <= reach * reach + 1e-9) disc.emplace_back(dc, dr);
    }
  }
  for (int r = 0; r < grid.height(); ++r) {
    for (int c = 0; c < grid.width(); ++c) {
      if (!grid.Occupied(c, r)) continue;
      // Interior cells add nothing beyond their free-bordering neighbors.
      const bool border = (grid.InBounds(c + 1, r) && !grid.Occupied(c + 1, r)) ||
                          (grid.InBounds(c - 1, r) && !grid.Occupied(c - 1, r)) ||
                          (grid.InBounds(c, r + 1) && !grid.Occupied(c, r + 1)) ||
                          (grid.InBounds(c, r - 1) && !grid.Occupied(c, r - 1));
      if (!border) continue;
      for (const auto& [dc, dr] : disc) {
        if (out.InBounds(c + dc, r + dr)) out.Set(c + dc, r + dr, true);
      }
    }
  }
  return out;
}

OccupancyGrid Inflate(const OccupancyGrid& grid, const Footprint& footprint) {
  if (footprint.length <= 0.0 || footprint.width <= 0.0) return grid;
  return Inflate(grid, footprint.CircumRadius());
}

std::optional<PlannerKind> PlannerKindFromName(std::string_view name) {
  if (name == "dijkstra") return PlannerKind::kDijkstra;
  if (name == "astar") return PlannerKind::kAStar;
  return std::nullopt;
}

std::string_view PlannerKindName(PlannerKind kind) {
  return kind == PlannerKind::kDijkstra ? "dijkstra" : "astar";
}

SearchResult Dijkstra(const OccupancyGrid& grid, const CellIndex& start,
                      const CellIndex& goal) {
  return BestFirst(grid, start, goal, /*use_heuristic=*/false);
}

SearchResult AStar(const OccupancyGrid& grid, const CellIndex& start,
                   const CellIndex& goal) {
  return BestFirst(grid, start, goal, /*use_heuristic=*/true);
}

SearchResult PlanPath(PlannerKind kind, const OccupancyGrid& grid,
                      const CellIndex& start, const CellIndex& goal) {
  return kind == PlannerKind::kDijkstra ? Dijkstra(grid, start, goal)
                                        : AStar(grid, start, goal);
}

std::vector<bool> ReachableMask(const OccupancyGrid& grid,
                                const CellIndex& start) {
  std::vector<bool> seen(grid.size(), false);
  if (grid.Occupied(start)) return seen;
  std::vector<CellIndex> stack{start};
  seen[grid.Index(start)] = true;
  while (!stack.empty()) {
    const CellIndex cell = stack.back();
    stack.pop_back();
    for (const Move& m : kMoves) {
      if (!CanMove(grid, cell, m)) continue;
      const CellIndex next{cell.col + m.dc, cell.row + m.dr};
      const std::size_t index = grid.Index(next);
      if (!seen[index]) {
        seen[index] = true;
        stack.push_back(next);
      }
    }
  }
  return seen;
}

}  // namespace zebrat
