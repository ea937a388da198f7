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

#ifndef ZEBRAT_SCENARIOS_H_
#define ZEBRAT_SCENARIOS_H_

#include <cstdint>

#include "zebrat/kinematics.h"
#include "zebrat/world.h"

namespace zebrat {

struct Scenario {
  OccupancyGrid grid;
  KinematicState start;
  KinematicState goal;
};

// City blocks on a lattice separated by roads, plus small scattered
// obstacles on the roads. Start is the bottom-left intersection facing +x,
// goal the top-right intersection.
struct UrbanConfig {
  double resolution = 0.05;
  int blocks_x = 3;
  int blocks_y = 3;
  double block_size = 3.5;
  double road_width = 3.0;
  int num_obstacles = 12;
  double obstacle_size = 0.3;
  std::uint64_t seed = 0;
  Footprint footprint;
};

// Throws ConfigurationError when the layout cannot host the required
// features (grid under 40x40 cells, roads narrower than four robot widths,
// or no obstacle placement that keeps start and goal connected).
Scenario BuildUrban(const UrbanConfig& config);

// A straight corridor of clear `width` between two walls running from x = 0
// to x = length along +x, centered on y = 0, with open plazas before the
// entrance and after the exit. Start is the entrance center facing +x.
struct AlleyConfig {
  double width = 1.2;
  double length = 5.0;
  double resolution = 0.05;
  double entrance_margin = 1.5;
  double exit_margin = 1.5;
  double side_margin = 1.0;
  Footprint footprint;
};

// Throws ConfigurationError when width <= footprint width.
Scenario BuildAlley(const AlleyConfig& config);

}  // namespace zebrat

#endif  // ZEBRAT_SCENARIOS_H_
