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

#include "zebrat/dwa.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zebrat/errors.h"

namespace zebrat {
namespace {

std::vector<double> Samples(double lo, double hi, int count) {
  std::vector<double> out;
  if (count == 1 || hi <= lo) {
    out.push_back(count == 1 ? (lo + hi) / 2.0 : lo);
    return out;
  }
  for (int i = 0; i < count; ++i) {
    out.push_back(lo + (hi - lo) * i / (count - 1));
  }
  return out;
}

}  // namespace

DwaConfig NormalizedDwaConfig(DwaConfig cfg) {
  if (cfg.v_samples < 1 || cfg.phi_samples < 1) {
    throw InvalidParameterError("DWA sample counts must be positive");
  }
  if (!(cfg.horizon > 0.0) || !(cfg.dt > 0.0) || cfg.dt > kMaxTimeStep ||
      !(cfg.accel_limit > 0.0) || !(cfg.steer_rate_limit > 0.0) ||
      !(cfg.max_speed > 0.0) || !(cfg.wheelbase > 0.0) ||
      !(cfg.clearance_range > 0.0) || cfg.min_speed > cfg.max_speed) {
    throw InvalidParameterError("DWA times, limits, and ranges must be positive");
  }
  const double sum =
      cfg.weights.heading + cfg.weights.clearance + cfg.weights.velocity;
  if (cfg.weights.heading < 0.0 || cfg.weights.clearance < 0.0 ||
      cfg.weights.velocity < 0.0 || !(sum > 0.0)) {
    throw InvalidParameterError("DWA weights must be non-negative");
  }
  cfg.weights.heading /= sum;
  cfg.weights.clearance /= sum;
  cfg.weights.velocity /= sum;
  return cfg;
}

std::vector<KinematicState> Rollout(const KinematicState& state,
                                    const ControlInput& u,
                                    const DwaConfig& cfg) {
  const KinematicParams params{cfg.wheelbase, cfg.max_speed, kDefaultTimeStep};
  const auto steps = static_cast<int>(std::lround(cfg.horizon / cfg.dt));
  std::vector<KinematicState> poses;
  poses.reserve(steps);
  KinematicState s = state;
  for (int i = 0; i < steps; ++i) {
    s = Advance(s, u, cfg.dt, params);
    poses.push_back(s);
  }
  return poses;
}

DynamicWindowPlanner::DynamicWindowPlanner(const OccupancyGrid& grid,
                                           const Footprint& footprint,
                                           const DwaConfig& cfg)
    : checker_(grid, footprint), cfg_(NormalizedDwaConfig(cfg)) {}

DwaResult DynamicWindowPlanner::Step(const KinematicState& state,
                                     const ControlInput& current,
                                     const Point2& goal) const {
  return Step(state, current, goal, cfg_.max_speed);
}

DwaResult DynamicWindowPlanner::Step(const KinematicState& state,
                                     const ControlInput& current,
                                     const Point2& goal,
                                     double speed_cap) const {
  const double v_hi = std::min({cfg_.max_speed, speed_cap,
                                current.v + cfg_.accel_limit * cfg_.dt});
  const double v_lo =
      std::min(v_hi, std::max(cfg_.min_speed,
                              current.v - cfg_.accel_limit * cfg_.dt));
  const double phi_hi = std::min(
      kSteeringLimit, current.phi + cfg_.steer_rate_limit * cfg_.dt);
  const double phi_lo = std::max(
      -kSteeringLimit, current.phi - cfg_.steer_rate_limit * cfg_.dt);
  const double speed_scale = std::max(std::abs(cfg_.min_speed), cfg_.max_speed);

  DwaResult result;
  double best = -1.0;
  for (double v : Samples(v_lo, v_hi, cfg_.v_samples)) {
    for (double phi : Samples(phi_lo, std::max(phi_lo, phi_hi),
                              cfg_.phi_samples)) {
      DwaCandidate candidate;
      candidate.control = {v, phi};
      const auto poses = Rollout(state, candidate.control, cfg_);
      double nearest = cfg_.clearance_range;
      for (const auto& pose : poses) {
        if (checker_.Collides(pose)) {
          candidate.collides = true;
          break;
        }
        nearest = std::min(nearest, checker_.Clearance({pose.x, pose.y}));
      }
      if (!candidate.collides) {
        const KinematicState& end = poses.empty() ? state : poses.back();
        const double bearing = std::atan2(goal.y - end.y, goal.x - end.x);
        const double error = std::abs(NormalizeAngle(bearing - end.theta));
        candidate.heading = 1.0 - error / std::numbers::pi;
        candidate.clearance = nearest / cfg_.clearance_range;
        candidate.velocity = std::abs(v) / speed_scale;
        candidate.score = cfg_.weights.heading * candidate.heading +
                          cfg_.weights.clearance * candidate.clearance +
                          cfg_.weights.velocity * candidate.velocity;
        if (candidate.score > best) {
          best = candidate.score;
          result.chosen = static_cast<int>(result.candidates.size());
        }
      }
      result.candidates.push_back(candidate);
    }
  }
  if (result.chosen < 0) {
    result.control = {0.0, 0.0};
    result.emergency_stop = true;
  } else {
    result.control = result.candidates[result.chosen].control;
  }
  return result;
}

DwaResult DwaStep(const KinematicState& state, const ControlInput& current,
                  const OccupancyGrid& grid, const Footprint& footprint,
                  const Point2& goal, const DwaConfig& cfg) {
  return DynamicWindowPlanner(grid, footprint, cfg).Step(state, current, goal);
}

}  // namespace zebrat
