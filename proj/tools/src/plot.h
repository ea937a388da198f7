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

#ifndef ZEBRAT_TOOLS_PLOT_H_
#define ZEBRAT_TOOLS_PLOT_H_

#include <string>
#include <vector>

#include "zebrat/q_learning.h"
#include "zebrat/trajectory_log.h"
#include "zebrat/world.h"

namespace zebrat::tools {

// Grid (merged occupied runs), planned path, executed trajectory, start and
// goal markers.
std::string NavigationSvg(const OccupancyGrid& grid,
                          const std::vector<Point2>& path,
                          const std::vector<TrajectoryRow>& trajectory,
                          const Point2& goal);

// Per-episode return (thin) with a moving average and the moving success
// rate on a secondary axis.
std::string LearningCurveSvg(const std::vector<EpisodeRecord>& curve,
                             int window = 100);

}  // namespace zebrat::tools

#endif  // ZEBRAT_TOOLS_PLOT_H_
