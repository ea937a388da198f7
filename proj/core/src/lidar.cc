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

#include "zebrat/lidar.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "zebrat/errors.h"

namespace zebrat {
namespace {

// Smallest reported range; a sensor inside an occupied cell sees this.
constexpr double kMinRange = 1e-9;

// Walks the grid cells crossed by the ray. `visit(cell, entry_distance)`
// returns true to stop the walk. Returns the distance at which the walk
// stopped, or max_range.
template <typename Visit>
double WalkRay(const OccupancyGrid& grid, const Point2& origin, double angle,
               double max_range, Visit&& visit) {
  const double res = grid.resolution();
  const double dir_x = std::cos(angle);
  const double dir_y = std::sin(angle);
  const double gx = (origin.x - grid.origin_x()) / res;
  const double gy = (origin.y - grid.origin_y()) / res;
  CellIndex cell{static_cast<int>(std::floor(gx)),
                 static_cast<int>(std::floor(gy))};
  if (visit(cell, 0.0)) return 0.0;

  constexpr double kInf = std::numeric_limits<double>::infinity();
  const int step_x = dir_x > 0.0 ? 1 : -1;
  const int step_y = dir_y > 0.0 ? 1 : -1;
  // Distances (m) along the ray to the next vertical / horizontal cell edge.
  const double delta_x = dir_x != 0.0 ? res / std::abs(dir_x) : kInf;
  const double delta_y = dir_y != 0.0 ? res / std::abs(dir_y) : kInf;
  double next_x = kInf;
  double next_y = kInf;
  if (dir_x != 0.0) {
    const double edge = step_x > 0 ? std::floor(gx) + 1.0 : std::floor(gx);
    next_x = (edge - gx) * res / dir_x;
  }
  if (dir_y != 0.0) {
    const double edge = step_y > 0 ? std::floor(gy) + 1.0 : std::floor(gy);
    next_y = (edge - gy) * res / dir_y;
  }
  for (;;) {
    double t = 0.0;
    if (next_x < next_y) {
      t = next_x;
      next_x += delta_x;
      cell.col += step_x;
    } else {
      t = next_y;
      next_y += delta_y;
      cell.row += step_y;
    }
    if (t >= max_range) return max_range;
    if (visit(cell, t)) return t;
  }
}

}  // namespace

void ValidateScanConfig(const ScanConfig& cfg) {
  if (cfg.num_beams < 1) {
    throw InvalidParameterError("num_beams must be >= 1");
  }
  if (!(cfg.fov > 0.0) || cfg.fov > 2.0 * std::numbers::pi + 1e-12) {
    throw InvalidParameterError("fov must be in (0, 2*pi]");
  }
  if (!(cfg.max_range > 0.0)) {
    throw InvalidParameterError("max_range must be positive");
  }
}

double BeamAngle(const ScanConfig& cfg, int beam) {
  if (cfg.num_beams == 1) return 0.0;
  return cfg.fov * (static_cast<double>(beam) / (cfg.num_beams - 1)) -
         cfg.fov / 2.0;
}

KinematicState SensorPose(const KinematicState& robot,
                          const MountOffset& mount) {
  const double c = std::cos(robot.theta);
  const double s = std::sin(robot.theta);
  return {robot.x + c * mount.x - s * mount.y,
          robot.y + s * mount.x + c * mount.y,
          NormalizeAngle(robot.theta + mount.yaw)};
}

double CastRay(const OccupancyGrid& grid, const Point2& origin, double angle,
               double max_range) {
  const double range = WalkRay(
      grid, origin, angle, max_range,
      [&grid](const CellIndex& cell, double) { return grid.Occupied(cell); });
  return std::clamp(range, kMinRange, max_range);
}

RayTrace TraceRay(const OccupancyGrid& grid, const Point2& origin,
                  double angle, double max_range) {
  RayTrace trace;
  const double range = WalkRay(
      grid, origin, angle, max_range,
      [&](const CellIndex& cell, double) {
        if (grid.Occupied(cell)) {
          if (grid.InBounds(cell)) trace.hit = cell;
          return true;
        }
        trace.free_cells.push_back(cell);
        return false;
      });
  trace.range = std::clamp(range, kMinRange, max_range);
  return trace;
}

LidarScan RaycastScan(const OccupancyGrid& grid, const KinematicState& pose,
                      const ScanConfig& cfg) {
  ValidateScanConfig(cfg);
  const KinematicState sensor = SensorPose(pose, cfg.mount);
  LidarScan scan;
  scan.max_range = cfg.max_range;
  scan.ranges.reserve(cfg.num_beams);
  for (int i = 0; i < cfg.num_beams; ++i) {
    scan.ranges.push_back(CastRay(grid, {sensor.x, sensor.y},
                                  sensor.theta + BeamAngle(cfg, i),
                                  cfg.max_range));
  }
  return scan;
}

std::vector<double> Downsample(const LidarScan& scan, int sectors) {
  const int n = static_cast<int>(scan.ranges.size());
  if (sectors < 1 || sectors > n) {
    throw InvalidParameterError("sector count must be in [1, " +
                                std::to_string(n) + "], got " +
                                std::to_string(sectors));
  }
  std::vector<double> pooled(sectors);
  for (int i = 0; i < sectors; ++i) {
    const auto begin = scan.ranges.begin() + static_cast<long>(i) * n / sectors;
    const auto end =
        scan.ranges.begin() + static_cast<long>(i + 1) * n / sectors;
    pooled[i] = *std::min_element(begin, end);
  }
  return pooled;
}

}  // namespace zebrat
