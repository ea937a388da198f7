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

#ifndef ZEBRAT_GRID_SEARCH_H_
#define ZEBRAT_GRID_SEARCH_H_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "zebrat/world.h"

namespace zebrat {

// Marks every free cell whose center lies within `radius` meters of an
// occupied cell center.
OccupancyGrid Inflate(const OccupancyGrid& grid, double radius);
// Inflates by half the footprint's circumscribed diameter.
OccupancyGrid Inflate(const OccupancyGrid& grid, const Footprint& footprint);

// Eight-connected path of free cells. Straight moves cost one resolution,
// diagonal moves sqrt(2) resolutions; a diagonal move needs both adjacent
// orthogonal cells free.
struct GridPath {
  std::vector<CellIndex> cells;  // start first; empty when start == goal
  double cost = 0.0;             // meters
};

struct SearchResult {
  std::optional<GridPath> path;  // nullopt when the goal is unreachable
  std::size_t expansions = 0;    // nodes settled
};

enum class PlannerKind { kDijkstra, kAStar };

std::optional<PlannerKind> PlannerKindFromName(std::string_view name);
std::string_view PlannerKindName(PlannerKind kind);

// Uniform-cost search; ties broken by (cost, row-major index).
SearchResult Dijkstra(const OccupancyGrid& grid, const CellIndex& start,
                      const CellIndex& goal);

// A* with the octile-distance heuristic; same optimal cost as Dijkstra.
SearchResult AStar(const OccupancyGrid& grid, const CellIndex& start,
                   const CellIndex& goal);

SearchResult PlanPath(PlannerKind kind, const OccupancyGrid& grid,
                      const CellIndex& start, const CellIndex& goal);

// Free cells reachable from `start` (eight-connected, same move rule as the
// planners), as a row-major mask.
std::vector<bool> ReachableMask(const OccupancyGrid& grid,
                                const CellIndex& start);

}  // namespace zebrat

#endif  // ZEBRAT_GRID_SEARCH_H_
