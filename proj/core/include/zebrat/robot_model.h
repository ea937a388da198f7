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

#ifndef ZEBRAT_ROBOT_MODEL_H_
#define ZEBRAT_ROBOT_MODEL_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace zebrat {

// Steering joints cannot rotate beyond +/-60 degrees.
inline constexpr double kSteeringLimit = 1.0471975511965976;  // pi / 3

// Overall robot geometry in meters. Defaults are the ZebraT delivery robot.
struct Dimensions {
  double wheel_radius = 0.150;
  double shell_length = 0.963;
  double shell_width = 0.672;
  double shell_height = 0.557;
  double total_height = 0.640;
  double wheelbase = 0.530;
  // Lateral wheel separation (center to center).
  double track_width = 0.572;
};

// Principal moments of inertia in kg*m^2. Products of inertia are zero.
struct InertiaTensor {
  double ixx = 0.0;
  double iyy = 0.0;
  double izz = 0.0;
};

// Solid box: length along x, width along y, depth along z.
struct BoxParams {
  double mass = 0.0;
  double length = 0.0;
  double width = 0.0;
  double depth = 0.0;
};

// Solid cylinder with its axis along z. A zero height is a thin disc.
struct CylinderParams {
  double mass = 0.0;
  double radius = 0.0;
  double height = 0.0;
};

// Throws InvalidParameterError on non-positive mass or edge.
InertiaTensor BoxInertia(const BoxParams& p);

// Throws InvalidParameterError on non-positive mass/radius or negative height.
InertiaTensor CylinderInertia(const CylinderParams& p);

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  bool operator==(const Vec3&) const = default;
};

struct Pose3 {
  Vec3 xyz;
  Vec3 rpy;

  bool operator==(const Pose3&) const = default;
};

struct BoxGeometry {
  double length = 0.0;
  double width = 0.0;
  double depth = 0.0;
};

struct CylinderGeometry {
  double radius = 0.0;
  double height = 0.0;
};

using Geometry = std::variant<BoxGeometry, CylinderGeometry>;

// Inertia of a uniform solid of the given primitive shape.
InertiaTensor InertiaOf(const Geometry& geometry, double mass);

struct LinkSpec {
  std::string name;
  Geometry geometry;
  double mass = 0.0;
  InertiaTensor inertia;
  // Geometry and inertial frame relative to the link frame.
  Pose3 origin;
};

enum class JointKind { kRevolute, kContinuous, kFixed };

std::string_view JointKindName(JointKind kind);
std::optional<JointKind> JointKindFromName(std::string_view name);

struct JointLimit {
  double lower = 0.0;
  double upper = 0.0;
};

struct JointSpec {
  std::string name;
  JointKind kind = JointKind::kFixed;
  std::string parent;
  std::string child;
  Vec3 axis{1.0, 0.0, 0.0};
  // Child link frame relative to the parent link frame.
  Pose3 origin;
  // Present iff kind == kRevolute.
  std::optional<JointLimit> limit;
};

struct RobotModel {
  std::string name;
  Dimensions dimensions;
  std::vector<LinkSpec> links;
  std::vector<JointSpec> joints;
  std::vector<LinkSpec> sensor_links;

  const LinkSpec* FindLink(std::string_view link_name) const;
  const JointSpec* FindJoint(std::string_view joint_name) const;
};

inline constexpr std::array<std::string_view, 7> kKinematicLinkNames = {
    "base_link", "lstr_link", "rstr_link", "fl_wheel",
    "fr_wheel",  "rl_wheel",  "rr_wheel"};

inline constexpr std::array<std::string_view, 6> kKinematicJointNames = {
    "base2lstr", "base2rstr", "fl_axle", "fr_axle", "rl_axle", "rr_axle"};

inline constexpr std::array<std::string_view, 3> kSensorLinkNames = {
    "lidar_link", "camera_link", "imu_link"};

// Mass in kg keyed by link name.
using LinkMasses = std::map<std::string, double, std::less<>>;

// Body shell 40 kg, wheels 3 kg, steering knuckles 1 kg, plus sensors.
LinkMasses DefaultLinkMasses();

// Construction knobs that are not part of Dimensions.
struct ModelOptions {
  std::string name = "zebrat";
  double wheel_width = 0.100;
  double steering_link_radius = 0.020;
  double steering_link_height = 0.050;
  bool include_sensors = false;  // lidar, camera, and imu placeholders
};

// Builds the seven-link, six-joint Ackermann model. The base_link frame sits
// at the rear-axle midpoint at wheel-center height. Throws
// InvalidParameterError on invalid dimensions or a missing mass entry.
RobotModel BuildCanonicalModel(const Dimensions& dims, const LinkMasses& masses,
                               const ModelOptions& options = {});

enum class ViolationKind {
  kInvalidDimensions,
  kDuplicateLinkName,
  kMissingLink,
  kUnexpectedLink,
  kMissingJoint,
  kWrongJointKind,
  kWrongJointConnection,
  kRevoluteMissingLimits,
  kUnexpectedLimits,
  kInvalidLimits,
  kWrongSteeringLimits,
  kInvalidAxis,
  kDanglingParent,
  kDanglingChild,
  kNotATree,
  kSensorNotFixed,
  kInvalidMass,
  kInvalidGeometry,
  kInvalidInertia,
  kInertiaMismatch,
  kDimensionMismatch,
};

struct Violation {
  ViolationKind kind;
  // Offending element, e.g. "joint base2lstr".
  std::string element;
  std::string rule;
};

// Empty iff every model, link, and joint invariant holds. Numeric
// comparisons tolerate the six-decimal quantization of URDF text.
std::vector<Violation> ValidateModel(const RobotModel& model);

}  // namespace zebrat

#endif  // ZEBRAT_ROBOT_MODEL_H_
