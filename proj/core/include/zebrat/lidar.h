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

#ifndef ZEBRAT_LIDAR_H_
#define ZEBRAT_LIDAR_H_

#include <numbers>
#include <optional>
#include <vector>

#include "zebrat/kinematics.h"
#include "zebrat/world.h"

namespace zebrat {

// Sensor placement in the body frame (rear-axle midpoint, x forward).
struct MountOffset {
  double x = 0.0;
  double y = 0.0;
  double yaw = 0.0;
};

// Planar scan geometry. Beam i points at
// fov * i / (num_beams - 1) - fov / 2 relative to the sensor heading
// (a single beam points straight ahead).
struct ScanConfig {
  int num_beams = 360;
  double fov = 2.0 * std::numbers::pi;
  double max_range = 10.0;
  MountOffset mount;
};

struct LidarScan {
  std::vector<double> ranges;  // each in (0, max_range]
  double max_range = 0.0;
};

// Throws InvalidParameterError for a config that violates its invariants.
void ValidateScanConfig(const ScanConfig& cfg);

double BeamAngle(const ScanConfig& cfg, int beam);

// World pose of the sensor for a robot pose.
KinematicState SensorPose(const KinematicState& robot, const MountOffset& mount);

// Distance along the ray to the first occupied cell (grid exterior counts as
// occupied), capped at max_range. Traverses cells with a DDA walk.
double CastRay(const OccupancyGrid& grid, const Point2& origin, double angle,
               double max_range);

// Cells a ray visits in order, ending with the blocking cell when the ray
// hits something inside the grid before max_range.
struct RayTrace {
  std::vector<CellIndex> free_cells;
  std::optional<CellIndex> hit;
  double range = 0.0;
};
RayTrace TraceRay(const OccupancyGrid& grid, const Point2& origin,
                  double angle, double max_range);

LidarScan RaycastScan(const OccupancyGrid& grid, const KinematicState& pose,
                      const ScanConfig& cfg);

// Min-pools the scan into `sectors` contiguous angular bins; bin i covers
// beams [i*n/sectors, (i+1)*n/sectors). Throws InvalidParameterError unless
// 1 <= sectors <= num_beams.
std::vector<double> Downsample(const LidarScan& scan, int sectors);

}  // namespace zebrat

#endif  // ZEBRAT_LIDAR_H_
