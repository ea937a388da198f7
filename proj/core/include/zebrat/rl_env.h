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

#ifndef ZEBRAT_RL_ENV_H_
#define ZEBRAT_RL_ENV_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "zebrat/kinematics.h"
#include "zebrat/lidar.h"
#include "zebrat/scenarios.h"

namespace zebrat {

// Reward shaping constants.
inline constexpr double kProgressWeight = 1.0;
inline constexpr double kStepPenalty = 0.01;
inline constexpr double kGoalBonus = 100.0;
inline constexpr double kCollisionPenalty = -100.0;

enum class Termination { kRunning, kGoal, kCollision, kTimeout };

std::string_view TerminationName(Termination reason);

// r = progress_delta - 0.01, plus +100 on reaching the goal or -100 on a
// collision. Timeouts add nothing.
double Reward(double prev_progress, double new_progress, Termination reason);

struct Observation {
  std::vector<double> sectors;  // min-pooled lidar ranges, m
  double heading_error = 0.0;   // rad, relative to the task axis
  double progress = 0.0;        // m
};

struct StepResult {
  Observation observation;
  double reward = 0.0;
  bool done = false;
  Termination reason = Termination::kRunning;
};

// (v, phi) pairs indexed by action id.
const std::vector<ControlInput>& DefaultActions();

struct AlleyEnvConfig {
  AlleyConfig alley;
  ScanConfig scan;
  int sectors = 8;
  double control_period = 0.1;  // s
  KinematicParams kinematics;
  int max_steps = 500;
  double lateral_jitter = 0.1;  // m, uniform +/-
  double heading_jitter = 0.1;  // rad, uniform +/-
  std::vector<ControlInput> actions = DefaultActions();
};

// Alley-passing episode: the robot starts at the entrance and succeeds once
// its rear axle has advanced the full alley length. A step that would collide
// ends the episode and leaves the robot at its last collision-free pose.
class AlleyEnv {
 public:
  // Throws ConfigurationError / InvalidParameterError for a bad config.
  explicit AlleyEnv(AlleyEnvConfig config = {});

  // Deterministic in `seed`.
  Observation Reset(std::uint64_t seed);

  // Throws ProtocolError before Reset() or after the episode ended, and
  // InvalidParameterError for an unknown action.
  StepResult Step(int action);
  // Applies an arbitrary control (clamped) for one control period.
  StepResult StepControl(ControlInput u);

  const KinematicState& state() const { return state_; }
  int steps() const { return steps_; }
  bool active() const { return active_; }
  double total_reward() const { return total_reward_; }
  int num_actions() const { return static_cast<int>(config_.actions.size()); }
  const AlleyEnvConfig& config() const { return config_; }
  const Scenario& scenario() const { return scenario_; }
  double Progress(const KinematicState& s) const;
  Observation Observe() const;

 private:
  AlleyEnvConfig config_;
  Scenario scenario_;
  CollisionChecker checker_;
  KinematicState state_;
  int steps_ = 0;
  bool started_ = false;
  bool active_ = false;
  double total_reward_ = 0.0;
};

}  // namespace zebrat

#endif  // ZEBRAT_RL_ENV_H_
