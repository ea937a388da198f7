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

#ifndef ZEBRAT_KINEMATICS_H_
#define ZEBRAT_KINEMATICS_H_

#include <limits>

#include "zebrat/robot_model.h"

namespace zebrat {

inline constexpr double kDefaultMaxSpeed = 2.0;   // m/s
inline constexpr double kDefaultTimeStep = 0.01;  // s
inline constexpr double kMaxTimeStep = 0.1;       // s
inline constexpr double kInfiniteRadius = std::numeric_limits<double>::infinity();

// Pose of the rear-axle midpoint in the world frame.
struct KinematicState {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;  // (-pi, pi]
};

// Rear-wheel longitudinal speed and steering angle.
struct ControlInput {
  double v = 0.0;
  double phi = 0.0;
};

struct StateDerivative {
  double dx = 0.0;
  double dy = 0.0;
  double dtheta = 0.0;
};

// Steering joint angles (rad) and axle joint velocities (rad/s).
struct JointState {
  double base2lstr = 0.0;
  double base2rstr = 0.0;
  double fl_axle = 0.0;
  double fr_axle = 0.0;
  double rl_axle = 0.0;
  double rr_axle = 0.0;
};

struct KinematicParams {
  double wheelbase = Dimensions{}.wheelbase;
  double max_speed = kDefaultMaxSpeed;
  double time_step = kDefaultTimeStep;
};

// Wraps into (-pi, pi].
double NormalizeAngle(double angle);

// Clamps phi to the +/-pi/3 steering limit and v to [-max_speed, max_speed].
ControlInput ClampControl(ControlInput u, double max_speed = kDefaultMaxSpeed);

// Nonholonomic car model: x' = v cos(theta), y' = v sin(theta),
// theta' = v tan(phi) / L. Expects an already clamped input.
StateDerivative Derivative(const KinematicState& s, const ControlInput& u,
                           double wheelbase);

// One classical Runge-Kutta step. Throws InvalidParameterError unless
// 0 < dt <= kMaxTimeStep and wheelbase > 0.
KinematicState Step(const KinematicState& s, const ControlInput& u, double dt,
                    double wheelbase);

// Clamps u and integrates for `duration` seconds in steps of at most
// params.time_step (the last step is shortened to land on `duration`).
KinematicState Advance(const KinematicState& s, ControlInput u,
                       double duration, const KinematicParams& params);

// Signed radius L / tan(phi) of the rear-axle circle after steering
// clamping; positive turns left. kInfiniteRadius for phi == 0.
double TurningRadius(const ControlInput& u, double wheelbase);

enum class SteeringMode {
  // Both steering joints follow phi.
  kParallel,
  // Inner wheel steers harder so both front wheels share the turn center.
  kAckermann,
};

struct JointMapOptions {
  SteeringMode mode = SteeringMode::kParallel;
  // Only used in kAckermann mode.
  double wheelbase = Dimensions{}.wheelbase;
  double track_width = Dimensions{}.track_width;
};

// Steering joints = phi, every axle = v / r. Throws InvalidParameterError for
// r <= 0.
JointState JointMap(const ControlInput& u, double wheel_radius,
                    const JointMapOptions& options = {});

}  // namespace zebrat

#endif  // ZEBRAT_KINEMATICS_H_
