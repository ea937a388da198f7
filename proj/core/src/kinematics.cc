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

#include "zebrat/kinematics.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "zebrat/errors.h"

namespace zebrat {
namespace {

KinematicState Offset(const KinematicState& s, const StateDerivative& d,
                      double h) {
  return {s.x + h * d.dx, s.y + h * d.dy, s.theta + h * d.dtheta};
}

}  // namespace

double NormalizeAngle(double angle) {
  constexpr double kPi = std::numbers::pi;
  if (angle > -kPi && angle <= kPi) return angle;
  double wrapped = std::remainder(angle, 2.0 * kPi);  // [-pi, pi]
  if (wrapped <= -kPi) wrapped += 2.0 * kPi;
  return wrapped;
}

ControlInput ClampControl(ControlInput u, double max_speed) {
  u.phi = std::clamp(u.phi, -kSteeringLimit, kSteeringLimit);
  u.v = std::clamp(u.v, -max_speed, max_speed);
  return u;
}

StateDerivative Derivative(const KinematicState& s, const ControlInput& u,
                           double wheelbase) {
  return {std::cos(s.theta) * u.v, std::sin(s.theta) * u.v,
          u.v / wheelbase * std::tan(u.phi)};
}

KinematicState Step(const KinematicState& s, const ControlInput& u, double dt,
                    double wheelbase) {
  if (!(dt > 0.0) || dt > kMaxTimeStep) {
    throw InvalidParameterError("time step must be in (0, 0.1], got " +
                                std::to_string(dt));
  }
  if (!(wheelbase > 0.0)) {
    throw InvalidParameterError("wheelbase must be positive");
  }
  const StateDerivative k1 = Derivative(s, u, wheelbase);
  const StateDerivative k2 = Derivative(Offset(s, k1, dt / 2), u, wheelbase);
  const StateDerivative k3 = Derivative(Offset(s, k2, dt / 2), u, wheelbase);
  const StateDerivative k4 = Derivative(Offset(s, k3, dt), u, wheelbase);
  KinematicState next;
  next.x = s.x + dt / 6.0 * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
  next.y = s.y + dt / 6.0 * (k1.dy + 2.0 * k2.dy + 2.0 * k3.dy + k4.dy);
  next.theta = NormalizeAngle(
      s.theta +
      dt / 6.0 * (k1.dtheta + 2.0 * k2.dtheta + 2.0 * k3.dtheta + k4.dtheta));
  return next;
}

KinematicState Advance(const KinematicState& s, ControlInput u,
                       double duration, const KinematicParams& params) {
  if (!(duration >= 0.0)) {
    throw InvalidParameterError("duration must be non-negative");
  }
  u = ClampControl(u, params.max_speed);
  KinematicState state = s;
  const auto steps = static_cast<long>(std::ceil(duration / params.time_step -
                                                 1e-9));
  for (long i = 0; i < steps; ++i) {
    const double remaining = duration - static_cast<double>(i) *
                                            params.time_step;
    state = Step(state, u, std::min(params.time_step, remaining),
                 params.wheelbase);
  }
  return state;
}

double TurningRadius(const ControlInput& u, double wheelbase) {
  const double phi = ClampControl(u).phi;
  if (phi == 0.0) return kInfiniteRadius;
  return wheelbase / std::tan(phi);
}

JointState JointMap(const ControlInput& u, double wheel_radius,
                    const JointMapOptions& options) {
  if (!(wheel_radius > 0.0)) {
    throw InvalidParameterError("wheel radius must be positive");
  }
  const double phi = std::clamp(u.phi, -kSteeringLimit, kSteeringLimit);
  const double spin = u.v / wheel_radius;
  JointState joints{phi, phi, spin, spin, spin, spin};
  if (options.mode == SteeringMode::kAckermann && phi != 0.0) {
    // Front wheels aim at the common turn center on the rear axle line.
    const double radius = options.wheelbase / std::tan(phi);
    const double half_track = options.track_width / 2.0;
    joints.base2lstr = std::clamp(
        std::atan(options.wheelbase / (radius - half_track)), -kSteeringLimit,
        kSteeringLimit);
    joints.base2rstr = std::clamp(
        std::atan(options.wheelbase / (radius + half_track)), -kSteeringLimit,
        kSteeringLimit);
  }
  return joints;
}

}  // namespace zebrat
