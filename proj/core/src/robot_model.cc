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

#include "zebrat/robot_model.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <utility>

#include "zebrat/errors.h"

namespace zebrat {
namespace {

// Absolute slack for values that went through six-decimal text.
constexpr double kQuantizationTolerance = 2e-6;

bool NearlyEqual(double a, double b, double relative = 1e-5) {
  return std::abs(a - b) <=
         std::max(kQuantizationTolerance, relative * std::abs(b));
}

void RequirePositive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw InvalidParameterError(std::string(what) + " must be positive, got " +
                                std::to_string(value));
  }
}

std::vector<std::string> DimensionProblems(const Dimensions& d) {
  std::vector<std::string> problems;
  const std::pair<const char*, double> fields[] = {
      {"wheel_radius", d.wheel_radius}, {"shell_length", d.shell_length},
      {"shell_width", d.shell_width},   {"shell_height", d.shell_height},
      {"total_height", d.total_height}, {"wheelbase", d.wheelbase},
      {"track_width", d.track_width}};
  for (const auto& [name, value] : fields) {
    if (!(value > 0.0) || !std::isfinite(value)) {
      problems.push_back(std::string(name) + " must be positive");
    }
  }
  if (d.total_height < d.shell_height) {
    problems.push_back("total_height must be >= shell_height");
  }
  if (d.wheelbase >= d.shell_length) {
    problems.push_back("wheelbase must be < shell_length");
  }
  return problems;
}

double MassFor(const LinkMasses& masses, std::string_view link) {
  auto it = masses.find(link);
  if (it == masses.end()) {
    throw InvalidParameterError("missing mass entry for link " +
                                std::string(link));
  }
  RequirePositive(it->second, "link mass");
  return it->second;
}

LinkSpec MakeLink(std::string_view name, Geometry geometry, double mass,
                  Pose3 origin = {}) {
  LinkSpec link;
  link.name = std::string(name);
  link.inertia = InertiaOf(geometry, mass);
  link.geometry = std::move(geometry);
  link.mass = mass;
  link.origin = origin;
  return link;
}

JointSpec MakeJoint(std::string_view name, JointKind kind,
                    std::string_view parent, std::string_view child,
                    Vec3 axis, Vec3 xyz) {
  JointSpec joint;
  joint.name = std::string(name);
  joint.kind = kind;
  joint.parent = std::string(parent);
  joint.child = std::string(child);
  joint.axis = axis;
  joint.origin.xyz = xyz;
  if (kind == JointKind::kRevolute) {
    joint.limit = JointLimit{-kSteeringLimit, kSteeringLimit};
  }
  return joint;
}

// Height of the body shell center above the wheel axles.
double ShellCenterHeight(const Dimensions& d) {
  return d.total_height - d.shell_height / 2.0 - d.wheel_radius;
}

bool GeometryValid(const Geometry& geometry) {
  if (const auto* box = std::get_if<BoxGeometry>(&geometry)) {
    return box->length > 0.0 && box->width > 0.0 && box->depth > 0.0;
  }
  const auto& cyl = std::get<CylinderGeometry>(geometry);
  return cyl.radius > 0.0 && cyl.height >= 0.0;
}

}  // namespace

InertiaTensor BoxInertia(const BoxParams& p) {
  RequirePositive(p.mass, "box mass");
  RequirePositive(p.length, "box length");
  RequirePositive(p.width, "box width");
  RequirePositive(p.depth, "box depth");
  const double l2 = p.length * p.length;
  const double w2 = p.width * p.width;
  const double d2 = p.depth * p.depth;
  const double k = p.mass / 12.0;
  return {k * (w2 + d2), k * (l2 + d2), k * (l2 + w2)};
}

InertiaTensor CylinderInertia(const CylinderParams& p) {
  RequirePositive(p.mass, "cylinder mass");
  RequirePositive(p.radius, "cylinder radius");
  if (!(p.height >= 0.0) || !std::isfinite(p.height)) {
    throw InvalidParameterError("cylinder height must be >= 0");
  }
  const double r2 = p.radius * p.radius;
  const double lateral = p.mass / 12.0 * (3.0 * r2 + p.height * p.height);
  return {lateral, lateral, p.mass * r2 / 2.0};
}

InertiaTensor InertiaOf(const Geometry& geometry, double mass) {
  if (const auto* box = std::get_if<BoxGeometry>(&geometry)) {
    return BoxInertia({mass, box->length, box->width, box->depth});
  }
  const auto& cyl = std::get<CylinderGeometry>(geometry);
  return CylinderInertia({mass, cyl.radius, cyl.height});
}

std::string_view JointKindName(JointKind kind) {
  switch (kind) {
    case JointKind::kRevolute:
      return "revolute";
    case JointKind::kContinuous:
      return "continuous";
    case JointKind::kFixed:
      return "fixed";
  }
  return "fixed";
}

std::optional<JointKind> JointKindFromName(std::string_view name) {
  if (name == "revolute") return JointKind::kRevolute;
  if (name == "continuous") return JointKind::kContinuous;
  if (name == "fixed") return JointKind::kFixed;
  return std::nullopt;
}

const LinkSpec* RobotModel::FindLink(std::string_view link_name) const {
  for (const auto* list : {&links, &sensor_links}) {
    for (const auto& link : *list) {
      if (link.name == link_name) return &link;
    }
  }
  return nullptr;
}

const JointSpec* RobotModel::FindJoint(std::string_view joint_name) const {
  for (const auto& joint : joints) {
    if (joint.name == joint_name) return &joint;
  }
  return nullptr;
}

LinkMasses DefaultLinkMasses() {
  return {{"base_link", 40.0},   {"lstr_link", 1.0},   {"rstr_link", 1.0},
          {"fl_wheel", 3.0},     {"fr_wheel", 3.0},    {"rl_wheel", 3.0},
          {"rr_wheel", 3.0},     {"lidar_link", 0.83}, {"camera_link", 0.08},
          {"imu_link", 0.05}};
}

RobotModel BuildCanonicalModel(const Dimensions& dims, const LinkMasses& masses,
                               const ModelOptions& options) {
  if (auto problems = DimensionProblems(dims); !problems.empty()) {
    throw InvalidParameterError("invalid dimensions: " + problems.front());
  }
  RequirePositive(options.wheel_width, "wheel_width");
  RequirePositive(options.steering_link_radius, "steering_link_radius");
  RequirePositive(options.steering_link_height, "steering_link_height");

  RobotModel model;
  model.name = options.name;
  model.dimensions = dims;

  const double shell_z = ShellCenterHeight(dims);
  const double half_track = dims.track_width / 2.0;
  // Cylinders are z-aligned; wheels spin about the lateral axis.
  const Pose3 wheel_frame{{0.0, 0.0, 0.0}, {std::numbers::pi / 2.0, 0.0, 0.0}};
  const CylinderGeometry wheel{dims.wheel_radius, options.wheel_width};
  const CylinderGeometry knuckle{options.steering_link_radius,
                                 options.steering_link_height};

  model.links.push_back(MakeLink(
      "base_link",
      BoxGeometry{dims.shell_length, dims.shell_width, dims.shell_height},
      MassFor(masses, "base_link"),
      Pose3{{dims.wheelbase / 2.0, 0.0, shell_z}, {}}));
  model.links.push_back(
      MakeLink("lstr_link", knuckle, MassFor(masses, "lstr_link")));
  model.links.push_back(
      MakeLink("rstr_link", knuckle, MassFor(masses, "rstr_link")));
  for (std::string_view name : {"fl_wheel", "fr_wheel", "rl_wheel",
                                "rr_wheel"}) {
    model.links.push_back(
        MakeLink(name, wheel, MassFor(masses, name), wheel_frame));
  }

  const Vec3 kVertical{0.0, 0.0, 1.0};
  const Vec3 kLateral{0.0, 1.0, 0.0};
  model.joints.push_back(MakeJoint("base2lstr", JointKind::kRevolute,
                                   "base_link", "lstr_link", kVertical,
                                   {dims.wheelbase, half_track, 0.0}));
  model.joints.push_back(MakeJoint("base2rstr", JointKind::kRevolute,
                                   "base_link", "rstr_link", kVertical,
                                   {dims.wheelbase, -half_track, 0.0}));
  model.joints.push_back(MakeJoint("fl_axle", JointKind::kContinuous,
                                   "lstr_link", "fl_wheel", kLateral, {}));
  model.joints.push_back(MakeJoint("fr_axle", JointKind::kContinuous,
                                   "rstr_link", "fr_wheel", kLateral, {}));
  model.joints.push_back(MakeJoint("rl_axle", JointKind::kContinuous,
                                   "base_link", "rl_wheel", kLateral,
                                   {0.0, half_track, 0.0}));
  model.joints.push_back(MakeJoint("rr_axle", JointKind::kContinuous,
                                   "base_link", "rr_wheel", kLateral,
                                   {0.0, -half_track, 0.0}));

  if (options.include_sensors) {
    const double shell_top = dims.total_height - dims.wheel_radius;
    const double center_x = dims.wheelbase / 2.0;
    const Vec3 kNoAxis{1.0, 0.0, 0.0};
    model.sensor_links.push_back(
        MakeLink("lidar_link", CylinderGeometry{0.0516, 0.0717},
                 MassFor(masses, "lidar_link")));
    model.sensor_links.push_back(
        MakeLink("camera_link", BoxGeometry{0.026, 0.124, 0.029},
                 MassFor(masses, "camera_link")));
    model.sensor_links.push_back(MakeLink(
        "imu_link", BoxGeometry{0.02, 0.02, 0.01}, MassFor(masses, "imu_link")));
    model.joints.push_back(MakeJoint("base2lidar", JointKind::kFixed,
                                     "base_link", "lidar_link", kNoAxis,
                                     {center_x, 0.0, shell_top + 0.0717 / 2}));
    model.joints.push_back(MakeJoint(
        "base2camera", JointKind::kFixed, "base_link", "camera_link", kNoAxis,
        {center_x + dims.shell_length / 2.0 + 0.013, 0.0, shell_z}));
    model.joints.push_back(MakeJoint("base2imu", JointKind::kFixed,
                                     "base_link", "imu_link", kNoAxis,
                                     {center_x, 0.0, shell_z}));
  }
  return model;
}

std::vector<Violation> ValidateModel(const RobotModel& model) {
  std::vector<Violation> out;
  auto add = [&out](ViolationKind kind, std::string element, std::string rule) {
    out.push_back({kind, std::move(element), std::move(rule)});
  };

  for (const auto& problem : DimensionProblems(model.dimensions)) {
    add(ViolationKind::kInvalidDimensions, "dimensions", problem);
  }

  // Link names and per-link physical checks.
  std::set<std::string, std::less<>> names;
  std::set<std::string, std::less<>> sensor_names;
  auto check_link = [&](const LinkSpec& link) {
    const std::string element = "link " + link.name;
    if (!names.insert(link.name).second) {
      add(ViolationKind::kDuplicateLinkName, element, "duplicate link name");
    }
    if (!(link.mass > 0.0)) {
      add(ViolationKind::kInvalidMass, element, "mass must be positive");
      return;
    }
    if (!GeometryValid(link.geometry)) {
      add(ViolationKind::kInvalidGeometry, element,
          "geometry extents must be positive");
      return;
    }
    const auto& i = link.inertia;
    if (i.ixx < 0.0 || i.iyy < 0.0 || i.izz < 0.0 ||
        i.ixx + i.iyy < i.izz - kQuantizationTolerance ||
        i.iyy + i.izz < i.ixx - kQuantizationTolerance ||
        i.izz + i.ixx < i.iyy - kQuantizationTolerance) {
      add(ViolationKind::kInvalidInertia, element,
          "principal moments must be non-negative and satisfy the triangle "
          "inequality");
    }
    const InertiaTensor expected = InertiaOf(link.geometry, link.mass);
    if (!NearlyEqual(i.ixx, expected.ixx) || !NearlyEqual(i.iyy, expected.iyy) ||
        !NearlyEqual(i.izz, expected.izz)) {
      add(ViolationKind::kInertiaMismatch, element,
          "inertia does not match the link geometry");
    }
  };
  for (const auto& link : model.links) check_link(link);
  for (const auto& link : model.sensor_links) {
    check_link(link);
    sensor_names.insert(link.name);
  }

  for (std::string_view expected : kKinematicLinkNames) {
    const bool present =
        std::any_of(model.links.begin(), model.links.end(),
                    [&](const LinkSpec& l) { return l.name == expected; });
    if (!present) {
      add(ViolationKind::kMissingLink, "link " + std::string(expected),
          "required kinematic link is missing");
    }
  }
  for (const auto& link : model.links) {
    if (std::find(kKinematicLinkNames.begin(), kKinematicLinkNames.end(),
                  link.name) == kKinematicLinkNames.end()) {
      add(ViolationKind::kUnexpectedLink, "link " + link.name,
          "kinematic links are limited to the seven-link Ackermann set");
    }
  }

  // Per-joint checks.
  for (const auto& joint : model.joints) {
    const std::string element = "joint " + joint.name;
    const bool parent_ok = names.count(joint.parent) > 0;
    const bool child_ok = names.count(joint.child) > 0;
    if (!parent_ok) {
      add(ViolationKind::kDanglingParent, element,
          "dangling parent link '" + joint.parent + "'");
    }
    if (!child_ok) {
      add(ViolationKind::kDanglingChild, element,
          "dangling child link '" + joint.child + "'");
    }
    if (joint.kind == JointKind::kRevolute) {
      if (!joint.limit) {
        add(ViolationKind::kRevoluteMissingLimits, element,
            "revolute joint missing limits");
      } else if (!(joint.limit->lower < joint.limit->upper)) {
        add(ViolationKind::kInvalidLimits, element,
            "lower limit must be below upper limit");
      }
    } else if (joint.limit) {
      add(ViolationKind::kUnexpectedLimits, element,
          std::string(JointKindName(joint.kind)) + " joint must not carry "
                                                   "limits");
    }
    const double norm = std::sqrt(joint.axis.x * joint.axis.x +
                                  joint.axis.y * joint.axis.y +
                                  joint.axis.z * joint.axis.z);
    if (std::abs(norm - 1.0) > 1e-6) {
      add(ViolationKind::kInvalidAxis, element, "axis must be a unit vector");
    }
    if (sensor_names.count(joint.child) > 0 &&
        joint.kind != JointKind::kFixed) {
      add(ViolationKind::kSensorNotFixed, element,
          "sensor links must attach through fixed joints");
    }
  }

  // Canonical joint table.
  struct Expected {
    std::string_view name;
    JointKind kind;
    std::string_view parent;
    std::string_view child;
  };
  constexpr Expected kTable[] = {
      {"base2lstr", JointKind::kRevolute, "base_link", "lstr_link"},
      {"base2rstr", JointKind::kRevolute, "base_link", "rstr_link"},
      {"fl_axle", JointKind::kContinuous, "lstr_link", "fl_wheel"},
      {"fr_axle", JointKind::kContinuous, "rstr_link", "fr_wheel"},
      {"rl_axle", JointKind::kContinuous, "base_link", "rl_wheel"},
      {"rr_axle", JointKind::kContinuous, "base_link", "rr_wheel"}};
  for (const auto& row : kTable) {
    const std::string element = "joint " + std::string(row.name);
    const JointSpec* joint = model.FindJoint(row.name);
    if (joint == nullptr) {
      add(ViolationKind::kMissingJoint, element,
          "required kinematic joint is missing");
      continue;
    }
    if (joint->kind != row.kind) {
      add(ViolationKind::kWrongJointKind, element,
          "expected " + std::string(JointKindName(row.kind)) + " joint");
    }
    if (joint->parent != row.parent || joint->child != row.child) {
      add(ViolationKind::kWrongJointConnection, element,
          "expected " + std::string(row.parent) + " -> " +
              std::string(row.child));
    }
    if (row.kind == JointKind::kRevolute && joint->limit &&
        (!NearlyEqual(joint->limit->lower, -kSteeringLimit, 0.0) ||
         !NearlyEqual(joint->limit->upper, kSteeringLimit, 0.0))) {
      add(ViolationKind::kWrongSteeringLimits, element,
          "steering limits must be +/-pi/3");
    }
  }

  // Tree rooted at base_link: every other link has exactly one parent joint
  // and is reachable from the root.
  std::map<std::string, int, std::less<>> parent_count;
  std::map<std::string, std::vector<std::string>, std::less<>> children;
  for (const auto& joint : model.joints) {
    ++parent_count[joint.child];
    children[joint.parent].push_back(joint.child);
  }
  if (names.count("base_link") > 0) {
    if (parent_count.count("base_link") > 0) {
      add(ViolationKind::kNotATree, "link base_link",
          "root link must not be a joint child");
    }
    std::set<std::string, std::less<>> seen{"base_link"};
    std::vector<std::string> stack{"base_link"};
    while (!stack.empty()) {
      std::string current = std::move(stack.back());
      stack.pop_back();
      for (const auto& child : children[current]) {
        if (seen.insert(child).second) stack.push_back(child);
      }
    }
    for (const auto& name : names) {
      if (name == "base_link") continue;
      const auto count = parent_count.count(name) ? parent_count[name] : 0;
      if (count != 1) {
        add(ViolationKind::kNotATree, "link " + name,
            "link must be the child of exactly one joint");
      } else if (seen.count(name) == 0) {
        add(ViolationKind::kNotATree, "link " + name,
            "link is not reachable from base_link");
      }
    }
  }

  // Geometry agrees with the declared dimensions.
  const Dimensions& d = model.dimensions;
  if (const LinkSpec* base = model.FindLink("base_link")) {
    const auto* box = std::get_if<BoxGeometry>(&base->geometry);
    if (box == nullptr || !NearlyEqual(box->length, d.shell_length, 0.0) ||
        !NearlyEqual(box->width, d.shell_width, 0.0) ||
        !NearlyEqual(box->depth, d.shell_height, 0.0)) {
      add(ViolationKind::kDimensionMismatch, "link base_link",
          "body shell must be a box of shell dimensions");
    } else if (!NearlyEqual(base->origin.xyz.x, d.wheelbase / 2.0, 0.0) ||
               !NearlyEqual(base->origin.xyz.z, ShellCenterHeight(d), 0.0)) {
      add(ViolationKind::kDimensionMismatch, "link base_link",
          "body shell origin inconsistent with wheelbase and heights");
    }
  }
  for (std::string_view wheel_name :
       {"fl_wheel", "fr_wheel", "rl_wheel", "rr_wheel"}) {
    const LinkSpec* wheel = model.FindLink(wheel_name);
    if (wheel == nullptr) continue;
    const auto* cyl = std::get_if<CylinderGeometry>(&wheel->geometry);
    if (cyl == nullptr || !NearlyEqual(cyl->radius, d.wheel_radius, 0.0)) {
      add(ViolationKind::kDimensionMismatch, "link " + std::string(wheel_name),
          "wheel must be a cylinder of wheel_radius");
    }
  }
  if (const JointSpec* j = model.FindJoint("base2lstr")) {
    if (!NearlyEqual(j->origin.xyz.x, d.wheelbase, 0.0) ||
        !NearlyEqual(j->origin.xyz.y, d.track_width / 2.0, 0.0)) {
      add(ViolationKind::kDimensionMismatch, "joint base2lstr",
          "steering pivot inconsistent with wheelbase and track_width");
    }
  }
  if (const JointSpec* j = model.FindJoint("rl_axle")) {
    if (!NearlyEqual(j->origin.xyz.x, 0.0, 0.0) ||
        !NearlyEqual(j->origin.xyz.y, d.track_width / 2.0, 0.0)) {
      add(ViolationKind::kDimensionMismatch, "joint rl_axle",
          "rear axle inconsistent with track_width");
    }
  }
  return out;
}

}  // namespace zebrat
