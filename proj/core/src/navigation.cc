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

#include "zebrat/navigation.h"

#include <algorithm>
#include <cmath>
#include <deque>

namespace zebrat {
namespace {

double Distance(const Point2& a, const Point2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Nearest free cell of `grid` to `from` by breadth-first search, limited to
// `max_radius` cells.
std::optional<CellIndex> NearestFree(const OccupancyGrid& grid,
                                     const CellIndex& from, int max_radius) {
  if (!grid.Occupied(from)) return from;
  std::optional<CellIndex> best;
  double best_d2 = 0.0;
  for (int r = 1; r <= max_radius && !best; ++r) {
    for (int dr = -r; dr <= r; ++dr) {
      for (int dc = -r; dc <= r; ++dc) {
        if (std::max(std::abs(dc), std::abs(dr)) != r) continue;
        const CellIndex c{from.col + dc, from.row + dr};
        if (grid.Occupied(c)) continue;
        const double d2 = double(dc) * dc + double(dr) * dr;
        if (!best || d2 < best_d2) {
          best = c;
          best_d2 = d2;
        }
      }
    }
  }
  return best;
}

}  // namespace

std::string_view NavigationStatusName(NavigationStatus status) {
  switch (status) {
    case NavigationStatus::kReached:
      return "reached";
    case NavigationStatus::kUnreachable:
      return "goal unreachable";
    case NavigationStatus::kStuck:
      return "stuck";
    case NavigationStatus::kTimeout:
      return "timeout";
  }
  return "unknown";
}

NavigationResult Navigate(const OccupancyGrid& grid, const Footprint& footprint,
                          const Point2& start, std::optional<double> heading,
                          const Point2& goal, const NavigationConfig& cfg) {
  NavigationResult result;
  const OccupancyGrid inflated = Inflate(grid, footprint);
  const CellIndex goal_cell = grid.CellAt(goal);
  if (inflated.Occupied(goal_cell)) return result;
  const auto start_cell =
      NearestFree(inflated, grid.CellAt(start),
                  static_cast<int>(std::ceil(footprint.CircumRadius() /
                                             grid.resolution())));
  if (!start_cell) return result;

  const SearchResult search =
      PlanPath(cfg.planner, inflated, *start_cell, goal_cell);
  result.expansions = search.expansions;
  if (!search.path) return result;
  result.global_path.push_back(grid.CellCenter(*start_cell));
  for (const auto& cell : search.path->cells) {
    if (cell == *start_cell) continue;
    result.global_path.push_back(grid.CellCenter(cell));
  }
  result.global_path.push_back(goal);

  std::size_t progress = 0;
  auto carrot_for = [&](const Point2& p) {
    // Advance along the path past points that are already close.
    const std::size_t window =
        std::min(result.global_path.size(), progress + 40);
    for (std::size_t i = progress; i < window; ++i) {
      if (Distance(result.global_path[i], p) <
          Distance(result.global_path[progress], p)) {
        progress = i;
      }
    }
    for (std::size_t i = progress; i < result.global_path.size(); ++i) {
      if (Distance(result.global_path[i], p) >= cfg.lookahead) {
        return result.global_path[i];
      }
    }
    return goal;
  };

  KinematicState state{start.x, start.y, 0.0};
  {
    const Point2 carrot = carrot_for(start);
    state.theta = heading ? NormalizeAngle(*heading)
                          : std::atan2(carrot.y - start.y, carrot.x - start.x);
  }

  const DynamicWindowPlanner planner(grid, footprint, cfg.dwa);
  DwaConfig reverse_cfg = cfg.dwa;
  reverse_cfg.min_speed = std::min(cfg.dwa.min_speed, -cfg.recovery_speed);
  const DynamicWindowPlanner recovery(grid, footprint, reverse_cfg);
  const KinematicParams params{cfg.dwa.wheelbase, cfg.dwa.max_speed,
                               kDefaultTimeStep};
  ControlInput current{};
  double t = 0.0;
  result.trajectory.push_back({t, state, current});
  int stops = 0;
  int stalled = 0;
  int recovering = 0;
  result.status = NavigationStatus::kTimeout;
  for (int step = 0; step < cfg.max_steps; ++step) {
    const Point2 here{state.x, state.y};
    const double remaining = Distance(here, goal);
    if (remaining <= cfg.goal_tolerance) {
      result.status = NavigationStatus::kReached;
      break;
    }
    const Point2 carrot = carrot_for(here);
    // Slow down on the final approach so the goal is not overshot.
    const double cap = std::max(0.25, remaining);
    const DwaResult choice = recovering > 0
                                 ? recovery.Step(state, current, carrot, cap)
                                 : planner.Step(state, current, carrot, cap);
    if (recovering > 0) --recovering;
    if (choice.emergency_stop) {
      if (++stops >= cfg.stuck_limit) {
        result.status = NavigationStatus::kStuck;
        break;
      }
    } else {
      stops = 0;
    }
    current = choice.control;
    // Standing still without an emergency is a local minimum of the window
    // search, typically with the steering at full lock beside an obstacle.
    stalled = current.v == 0.0 ? stalled + 1 : 0;
    if (stalled >= cfg.stall_limit && recovering == 0) {
      recovering = cfg.recovery_steps;
      stalled = 0;
    }
    state = Advance(state, current, cfg.control_period, params);
    t += cfg.control_period;
    result.trajectory.push_back({t, state, current});
  }
  result.final_distance =
      Distance({state.x, state.y}, goal);
  if (result.status == NavigationStatus::kTimeout &&
      result.final_distance <= cfg.goal_tolerance) {
    result.status = NavigationStatus::kReached;
  }
  return result;
}

}  // namespace zebrat
