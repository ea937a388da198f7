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

#include "zebrat/scenarios.h"

#include <cmath>
#include <random>
#include <string>

#include "zebrat/errors.h"
#include "zebrat/grid_search.h"

namespace zebrat {
namespace {

constexpr int kMinCells = 40;
constexpr int kPlacementAttempts = 200;

int Cells(double meters, double resolution) {
  return static_cast<int>(std::lround(meters / resolution));
}

}  // namespace

Scenario BuildUrban(const UrbanConfig& config) {
  if (!(config.resolution > 0.0) || config.blocks_x < 1 ||
      config.blocks_y < 1 || !(config.block_size > 0.0)) {
    throw ConfigurationError("urban layout needs positive block geometry");
  }
  if (config.road_width < 4.0 * config.footprint.width) {
    throw ConfigurationError("roads must be at least four robot widths wide");
  }
  const double pitch = config.block_size + config.road_width;
  const double size_x = config.blocks_x * pitch + config.road_width;
  const double size_y = config.blocks_y * pitch + config.road_width;
  const int width = Cells(size_x, config.resolution);
  const int height = Cells(size_y, config.resolution);
  if (width < kMinCells || height < kMinCells) {
    throw ConfigurationError("urban grid must be at least 40x40 cells, got " +
                             std::to_string(width) + "x" +
                             std::to_string(height));
  }

  OccupancyGrid base(width, height, config.resolution);
  base.CloseBoundary();
  for (int i = 0; i < config.blocks_x; ++i) {
    for (int j = 0; j < config.blocks_y; ++j) {
      const double x0 = config.road_width + i * pitch;
      const double y0 = config.road_width + j * pitch;
      base.FillRect(x0, y0, x0 + config.block_size, y0 + config.block_size,
                    true);
    }
  }

  const double half_road = config.road_width / 2.0;
  Scenario scenario{base, {half_road, half_road, 0.0},
                    {size_x - half_road, size_y - half_road, 0.0}};
  if (Collide(base, config.footprint, scenario.start) ||
      Collide(base, config.footprint, scenario.goal)) {
    throw ConfigurationError("start or goal pose collides with the layout");
  }

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> ux(0.0, size_x);
  std::uniform_real_distribution<double> uy(0.0, size_y);
  const double keep_out = config.footprint.CircumRadius() +
                          config.footprint.offset + config.obstacle_size;
  const CellIndex start_cell = base.CellAt({scenario.start.x, scenario.start.y});
  const CellIndex goal_cell = base.CellAt({scenario.goal.x, scenario.goal.y});

  int placed = 0;
  for (int attempt = 0;
       placed < config.num_obstacles && attempt < kPlacementAttempts;
       ++attempt) {
    const double x = ux(rng);
    const double y = uy(rng);
    const double half = config.obstacle_size / 2.0;
    if (std::hypot(x - scenario.start.x, y - scenario.start.y) < keep_out ||
        std::hypot(x - scenario.goal.x, y - scenario.goal.y) < keep_out) {
      continue;
    }
    OccupancyGrid candidate = scenario.grid;
    candidate.FillRect(x - half, y - half, x + half, y + half, true);
    if (candidate == scenario.grid) continue;  // landed inside a block
    // Obstacles may narrow a road but never cut the start from the goal.
    const OccupancyGrid plan = Inflate(candidate, config.footprint);
    if (!ReachableMask(plan, start_cell)[plan.Index(goal_cell)]) continue;
    scenario.grid = std::move(candidate);
    ++placed;
  }
  if (placed < config.num_obstacles) {
    throw ConfigurationError("could not place " +
                             std::to_string(config.num_obstacles) +
                             " obstacles without blocking the route");
  }
  return scenario;
}

Scenario BuildAlley(const AlleyConfig& config) {
  if (!(config.resolution > 0.0) || !(config.length > 0.0) ||
      config.entrance_margin < 0.0 || config.exit_margin < 0.0 ||
      config.side_margin < 0.0) {
    throw ConfigurationError("alley geometry must be positive");
  }
  if (config.width <= config.footprint.width) {
    throw ConfigurationError("alley width must exceed the robot width");
  }
  const double res = config.resolution;
  const int half_rows = Cells(config.width / 2.0 + config.side_margin, res);
  const int before = Cells(config.entrance_margin, res);
  const int cols = before + Cells(config.length, res) +
                   Cells(config.exit_margin, res);
  OccupancyGrid grid(cols, 2 * half_rows, res, -before * res,
                     -half_rows * res);
  grid.CloseBoundary();
  const double half_width = config.width / 2.0;
  grid.FillRect(0.0, half_width, config.length, grid.max_y(), true);
  grid.FillRect(0.0, grid.origin_y(), config.length, -half_width, true);
  // Cells straddling the corridor edge stay free only if their center is
  // strictly inside the clear width.
  for (int c = 0; c < grid.width(); ++c) {
    for (int r = 0; r < grid.height(); ++r) {
      const Point2 p = grid.CellCenter({c, r});
      if (p.x >= 0.0 && p.x < config.length &&
          std::abs(p.y) >= half_width) {
        grid.Set(c, r, true);
      }
    }
  }
  Scenario scenario{grid, {0.0, 0.0, 0.0}, {config.length, 0.0, 0.0}};
  if (Collide(grid, config.footprint, scenario.start)) {
    throw ConfigurationError("robot does not fit at the alley entrance");
  }
  return scenario;
}

}  // namespace zebrat
