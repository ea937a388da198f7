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

#ifndef ZEBRAT_DWA_H_
#define ZEBRAT_DWA_H_

#include <vector>

#include "zebrat/kinematics.h"
#include "zebrat/world.h"

namespace zebrat {

struct DwaWeights {
  double heading = 0.5;
  double clearance = 0.3;
  double velocity = 0.2;
};

struct DwaConfig {
  int v_samples = 11;
  int phi_samples = 21;
  double horizon = 2.0;  // s
  double dt = 0.1;       // s between rollout poses
  DwaWeights weights;
  double accel_limit = 1.0;        // m/s^2
  double steer_rate_limit = 1.0;   // rad/s
  double min_speed = 0.0;          // m/s; negative allows reversing
  double max_speed = kDefaultMaxSpeed;
  double wheelbase = Dimensions{}.wheelbase;
  // Clearance saturates at this distance (m).
  double clearance_range = 10.0;
};

// Throws InvalidParameterError for non-positive counts, times, or weights.
// Weights are normalized to sum to one.
DwaConfig NormalizedDwaConfig(DwaConfig cfg);

struct DwaCandidate {
  ControlInput control;
  bool collides = false;
  double heading = 0.0;    // [0, 1]
  double clearance = 0.0;  // [0, 1]
  double velocity = 0.0;   // [0, 1]
  double score = 0.0;
};

struct DwaResult {
  ControlInput control;
  bool emergency_stop = false;
  // Index into `candidates` of the chosen sample; -1 on emergency stop.
  int chosen = -1;
  std::vector<DwaCandidate> candidates;
};

// Poses visited by holding `u` from `state`: one every cfg.dt up to the
// horizon (the start pose is not included).
std::vector<KinematicState> Rollout(const KinematicState& state,
                                    const ControlInput& u,
                                    const DwaConfig& cfg);

// Dynamic window approach over a fixed grid. The distance field is built once
// at construction; the grid must outlive the planner.
class DynamicWindowPlanner {
 public:
  DynamicWindowPlanner(const OccupancyGrid& grid, const Footprint& footprint,
                       const DwaConfig& cfg = {});

  // Samples (v, phi) inside the window reachable from `current` within one
  // cfg.dt, drops samples whose rollout collides, and returns the highest
  // weighted score (lowest sample index on ties). When every sample collides
  // the result is a stop command flagged as an emergency stop.
  DwaResult Step(const KinematicState& state, const ControlInput& current,
                 const Point2& goal) const;

  // As Step() with the window's upper speed additionally capped.
  DwaResult Step(const KinematicState& state, const ControlInput& current,
                 const Point2& goal, double speed_cap) const;

  const DwaConfig& config() const { return cfg_; }
  const CollisionChecker& checker() const { return checker_; }

 private:
  CollisionChecker checker_;
  DwaConfig cfg_;
};

// One-shot convenience wrapper around DynamicWindowPlanner.
DwaResult DwaStep(const KinematicState& state, const ControlInput& current,
                  const OccupancyGrid& grid, const Footprint& footprint,
                  const Point2& goal, const DwaConfig& cfg = {});

}  // namespace zebrat

#endif  // ZEBRAT_DWA_H_
