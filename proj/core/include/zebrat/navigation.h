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

#ifndef ZEBRAT_NAVIGATION_H_
#define ZEBRAT_NAVIGATION_H_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "zebrat/dwa.h"
#include "zebrat/grid_search.h"
#include "zebrat/trajectory_log.h"
#include "zebrat/world.h"

namespace zebrat {

// Global planner on the inflated grid, then DWA toward a carrot point that
// slides along the global path.
struct NavigationConfig {
  PlannerKind planner = PlannerKind::kAStar;
  DwaConfig dwa;
  double goal_tolerance = 0.2;   // m
  double lookahead = 1.0;        // m
  double control_period = 0.1;   // s
  int max_steps = 3000;
  // Consecutive emergency stops before giving up.
  int stuck_limit = 20;
  // After this many consecutive zero-speed steps the controller spends
  // `recovery_steps` with reversing allowed down to -recovery_speed.
  int stall_limit = 10;
  int recovery_steps = 30;
  double recovery_speed = 0.5;  // m/s
};

enum class NavigationStatus { kReached, kUnreachable, kStuck, kTimeout };

std::string_view NavigationStatusName(NavigationStatus status);

struct NavigationResult {
  NavigationStatus status = NavigationStatus::kUnreachable;
  std::vector<Point2> global_path;  // cell centers, then the exact goal
  std::size_t expansions = 0;
  std::vector<TrajectoryRow> trajectory;
  double final_distance = 0.0;
};

// Start heading that faces the global path when none is given.
NavigationResult Navigate(const OccupancyGrid& grid, const Footprint& footprint,
                          const Point2& start, std::optional<double> heading,
                          const Point2& goal, const NavigationConfig& cfg = {});

}  // namespace zebrat

#endif  // ZEBRAT_NAVIGATION_H_
