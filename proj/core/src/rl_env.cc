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

#include "zebrat/rl_env.h"

#include <random>
#include <string>

#include "zebrat/errors.h"

namespace zebrat {

std::string_view TerminationName(Termination reason) {
  switch (reason) {
    case Termination::kRunning:
      return "running";
    case Termination::kGoal:
      return "goal";
    case Termination::kCollision:
      return "collision";
    case Termination::kTimeout:
      return "timeout";
  }
  return "running";
}

double Reward(double prev_progress, double new_progress, Termination reason) {
  double r = kProgressWeight * (new_progress - prev_progress) - kStepPenalty;
  if (reason == Termination::kGoal) r += kGoalBonus;
  if (reason == Termination::kCollision) r += kCollisionPenalty;
  return r;
}

const std::vector<ControlInput>& DefaultActions() {
  static const std::vector<ControlInput> kActions = {
      {0.5, -0.5}, {0.5, -0.25}, {0.5, 0.0}, {0.5, 0.25}, {0.5, 0.5},
      {0.2, 0.0}};
  return kActions;
}

AlleyEnv::AlleyEnv(AlleyEnvConfig config)
    : config_(std::move(config)),
      scenario_(BuildAlley(config_.alley)),
      checker_(scenario_.grid, config_.alley.footprint),
      state_(scenario_.start) {
  ValidateScanConfig(config_.scan);
  if (config_.sectors < 1 || config_.sectors > config_.scan.num_beams) {
    throw InvalidParameterError("sector count must be in [1, num_beams]");
  }
  if (!(config_.control_period > 0.0) || config_.max_steps < 1 ||
      config_.actions.empty()) {
    throw InvalidParameterError(
        "control period, step budget, and action set must be non-empty");
  }
  for (const auto& action : config_.actions) {
    const ControlInput clamped =
        ClampControl(action, config_.kinematics.max_speed);
    if (clamped.v != action.v || clamped.phi != action.phi) {
      throw InvalidParameterError("action outside the control limits");
    }
  }
}

double AlleyEnv::Progress(const KinematicState& s) const {
  return s.x - scenario_.start.x;
}

Observation AlleyEnv::Observe() const {
  Observation obs;
  obs.sectors =
      Downsample(RaycastScan(scenario_.grid, state_, config_.scan),
                 config_.sectors);
  obs.heading_error = NormalizeAngle(state_.theta - scenario_.start.theta);
  obs.progress = Progress(state_);
  return obs;
}

Observation AlleyEnv::Reset(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const double lateral = config_.lateral_jitter * unit(rng);
  const double heading = config_.heading_jitter * unit(rng);
  state_ = scenario_.start;
  state_.y += lateral;
  state_.theta = NormalizeAngle(state_.theta + heading);
  if (checker_.Collides(state_)) {
    throw ConfigurationError("reset jitter places the robot in a wall");
  }
  steps_ = 0;
  total_reward_ = 0.0;
  started_ = true;
  active_ = true;
  return Observe();
}

StepResult AlleyEnv::Step(int action) {
  if (action < 0 || action >= num_actions()) {
    throw InvalidParameterError("unknown action " + std::to_string(action));
  }
  return StepControl(config_.actions[action]);
}

StepResult AlleyEnv::StepControl(ControlInput u) {
  if (!started_) throw ProtocolError("step before reset");
  if (!active_) throw ProtocolError("step after the episode ended");
  const double before = Progress(state_);
  const KinematicState next =
      Advance(state_, u, config_.control_period, config_.kinematics);
  ++steps_;

  StepResult result;
  if (checker_.Collides(next)) {
    result.reason = Termination::kCollision;
  } else {
    state_ = next;
    if (Progress(state_) >= config_.alley.length) {
      result.reason = Termination::kGoal;
    } else if (steps_ >= config_.max_steps) {
      result.reason = Termination::kTimeout;
    }
  }
  result.reward = Reward(before, Progress(state_), result.reason);
  result.done = result.reason != Termination::kRunning;
  result.observation = Observe();
  total_reward_ += result.reward;
  active_ = !result.done;
  return result;
}

}  // namespace zebrat
