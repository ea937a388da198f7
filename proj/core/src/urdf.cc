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

#include "zebrat/urdf.h"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <utility>

#include "xml.h"
#include "zebrat/format.h"

namespace zebrat {
namespace {

// URDF requires effort and velocity on <limit>; they are not modeled.
constexpr std::string_view kLimitEffort = "100.000000";
constexpr std::string_view kLimitVelocity = "10.000000";

std::string Triple(const Vec3& v) {
  return FormatFixed6(v.x) + " " + FormatFixed6(v.y) + " " + FormatFixed6(v.z);
}

std::string Attr(std::string_view key, std::string_view value) {
  return " " + std::string(key) + "=\"" + std::string(value) + "\"";
}

std::string OriginElement(const Pose3& pose) {
  return "<origin" + Attr("xyz", Triple(pose.xyz)) +
         Attr("rpy", Triple(pose.rpy)) + "/>";
}

std::string GeometryElement(const Geometry& geometry) {
  if (const auto* box = std::get_if<BoxGeometry>(&geometry)) {
    return "<box" +
           Attr("size", Triple({box->length, box->width, box->depth})) + "/>";
  }
  const auto& cyl = std::get<CylinderGeometry>(geometry);
  return "<cylinder" + Attr("radius", FormatFixed6(cyl.radius)) +
         Attr("length", FormatFixed6(cyl.height)) + "/>";
}

void EmitLink(const LinkSpec& link, std::ostringstream& out) {
  const auto& i = link.inertia;
  out << "  <link" << Attr("name", link.name) << ">\n";
  out << "    <inertial>\n";
  out << "      " << OriginElement(link.origin) << "\n";
  out << "      <mass" << Attr("value", FormatFixed6(link.mass)) << "/>\n";
  out << "      <inertia" << Attr("ixx", FormatFixed6(i.ixx))
      << Attr("ixy", "0.000000") << Attr("ixz", "0.000000")
      << Attr("iyy", FormatFixed6(i.iyy)) << Attr("iyz", "0.000000")
      << Attr("izz", FormatFixed6(i.izz)) << "/>\n";
  out << "    </inertial>\n";
  for (const char* tag : {"visual", "collision"}) {
    out << "    <" << tag << ">\n";
    out << "      " << OriginElement(link.origin) << "\n";
    out << "      <geometry>\n";
    out << "        " << GeometryElement(link.geometry) << "\n";
    out << "      </geometry>\n";
    out << "    </" << tag << ">\n";
  }
  out << "  </link>\n";
}

void EmitJoint(const JointSpec& joint, std::ostringstream& out) {
  out << "  <joint" << Attr("name", joint.name)
      << Attr("type", JointKindName(joint.kind)) << ">\n";
  out << "    <parent" << Attr("link", joint.parent) << "/>\n";
  out << "    <child" << Attr("link", joint.child) << "/>\n";
  out << "    " << OriginElement(joint.origin) << "\n";
  if (joint.kind != JointKind::kFixed) {
    out << "    <axis" << Attr("xyz", Triple(joint.axis)) << "/>\n";
  }
  if (joint.limit) {
    out << "    <limit" << Attr("lower", FormatFixed6(joint.limit->lower))
        << Attr("upper", FormatFixed6(joint.limit->upper))
        << Attr("effort", kLimitEffort) << Attr("velocity", kLimitVelocity)
        << "/>\n";
  }
  out << "  </joint>\n";
}

std::string Where(const xml::Element& e) {
  return " (line " + std::to_string(e.line) + ")";
}

class UrdfReader {
 public:
  UrdfParseResult Read(const xml::Element& root) {
    if (root.name != "robot") {
      throw SemanticError("root element must be <robot>" + Where(root));
    }
    result_.model.name = std::string(RequireAttr(root, "name"));
    std::vector<LinkSpec> links;
    std::vector<JointSpec> joints;
    for (const auto& child : root.children) {
      if (child.name == "link") {
        links.push_back(ReadLink(child));
      } else if (child.name == "joint") {
        joints.push_back(ReadJoint(child));
      } else {
        Warn("ignored element <" + child.name + ">" + Where(child));
      }
    }

    std::set<std::string, std::less<>> names;
    for (const auto& link : links) {
      if (!names.insert(link.name).second) {
        throw SemanticError("duplicate link '" + link.name + "'");
      }
    }
    std::set<std::string, std::less<>> fixed_children;
    for (const auto& joint : joints) {
      if (names.count(joint.parent) == 0) {
        throw SemanticError("joint '" + joint.name +
                            "' references undefined parent link '" +
                            joint.parent + "'");
      }
      if (names.count(joint.child) == 0) {
        throw SemanticError("joint '" + joint.name +
                            "' references undefined child link '" +
                            joint.child + "'");
      }
      if (joint.kind == JointKind::kFixed) fixed_children.insert(joint.child);
    }

    for (auto& link : links) {
      const bool kinematic =
          std::find(kKinematicLinkNames.begin(), kKinematicLinkNames.end(),
                    link.name) != kKinematicLinkNames.end();
      if (!kinematic && fixed_children.count(link.name) > 0) {
        result_.model.sensor_links.push_back(std::move(link));
      } else {
        result_.model.links.push_back(std::move(link));
      }
    }
    result_.model.joints = std::move(joints);
    result_.model.dimensions = DeriveDimensions(result_.model);
    return std::move(result_);
  }

 private:
  void Warn(std::string message) {
    result_.warnings.push_back(std::move(message));
  }

  static std::string_view RequireAttr(const xml::Element& e,
                                      std::string_view key) {
    auto value = e.Attribute(key);
    if (!value) {
      throw SemanticError("<" + e.name + "> is missing attribute '" +
                          std::string(key) + "'" + Where(e));
    }
    return *value;
  }

  static double Number(const xml::Element& e, std::string_view key) {
    const auto text = RequireAttr(e, key);
    double value = 0.0;
    if (!ParseDouble(text, &value)) {
      throw SemanticError("attribute " + std::string(key) + "=\"" +
                          std::string(text) + "\" is not a number" + Where(e));
    }
    return value;
  }

  static Vec3 Vector(const xml::Element& e, std::string_view key,
                     Vec3 fallback) {
    const auto text = e.Attribute(key);
    if (!text) return fallback;
    std::array<double, 3> values{};
    std::string_view rest = *text;
    for (double& value : values) {
      const auto start = rest.find_first_not_of(" \t\n\r");
      if (start == std::string_view::npos) {
        throw SemanticError("attribute " + std::string(key) +
                            " needs three numbers" + Where(e));
      }
      rest.remove_prefix(start);
      const auto end = std::min(rest.find_first_of(" \t\n\r"), rest.size());
      if (!ParseDouble(rest.substr(0, end), &value)) {
        throw SemanticError("attribute " + std::string(key) +
                            " has a non-numeric component" + Where(e));
      }
      rest.remove_prefix(end);
    }
    if (rest.find_first_not_of(" \t\n\r") != std::string_view::npos) {
      throw SemanticError("attribute " + std::string(key) +
                          " has more than three numbers" + Where(e));
    }
    return {values[0], values[1], values[2]};
  }

  static Pose3 Origin(const xml::Element* parent) {
    Pose3 pose;
    if (parent == nullptr) return pose;
    if (const auto* origin = parent->FirstChild("origin")) {
      pose.xyz = Vector(*origin, "xyz", {});
      pose.rpy = Vector(*origin, "rpy", {});
    }
    return pose;
  }

  static Geometry ReadGeometry(const xml::Element& holder,
                               const std::string& link) {
    const auto* geometry = holder.FirstChild("geometry");
    if (geometry == nullptr) {
      throw SemanticError("link '" + link + "' <" + holder.name +
                          "> has no <geometry>" + Where(holder));
    }
    if (const auto* box = geometry->FirstChild("box")) {
      const Vec3 size = Vector(*box, "size", {});
      return BoxGeometry{size.x, size.y, size.z};
    }
    if (const auto* cyl = geometry->FirstChild("cylinder")) {
      return CylinderGeometry{Number(*cyl, "radius"), Number(*cyl, "length")};
    }
    throw SemanticError("link '" + link +
                        "' uses unsupported geometry (only box and cylinder)" +
                        Where(*geometry));
  }

  static bool SameGeometry(const Geometry& a, const Geometry& b) {
    if (a.index() != b.index()) return false;
    if (const auto* x = std::get_if<BoxGeometry>(&a)) {
      const auto& y = std::get<BoxGeometry>(b);
      return x->length == y.length && x->width == y.width &&
             x->depth == y.depth;
    }
    const auto& x = std::get<CylinderGeometry>(a);
    const auto& y = std::get<CylinderGeometry>(b);
    return x.radius == y.radius && x.height == y.height;
  }

  LinkSpec ReadLink(const xml::Element& e) {
    LinkSpec link;
    link.name = std::string(RequireAttr(e, "name"));
    const auto* inertial = e.FirstChild("inertial");
    if (inertial == nullptr) {
      throw SemanticError("link '" + link.name + "' has no <inertial>" +
                          Where(e));
    }
    const auto* mass = inertial->FirstChild("mass");
    const auto* inertia = inertial->FirstChild("inertia");
    if (mass == nullptr || inertia == nullptr) {
      throw SemanticError("link '" + link.name +
                          "' <inertial> needs <mass> and <inertia>" +
                          Where(*inertial));
    }
    link.mass = Number(*mass, "value");
    link.inertia = {Number(*inertia, "ixx"), Number(*inertia, "iyy"),
                    Number(*inertia, "izz")};
    for (const char* off_diagonal : {"ixy", "ixz", "iyz"}) {
      double value = 0.0;
      if (auto text = inertia->Attribute(off_diagonal);
          text && ParseDouble(*text, &value) && value != 0.0) {
        Warn("link '" + link.name + "': non-zero " + off_diagonal +
             " dropped" + Where(*inertia));
      }
    }
    link.origin = Origin(inertial);

    const auto* visual = e.FirstChild("visual");
    const auto* collision = e.FirstChild("collision");
    if (visual == nullptr && collision == nullptr) {
      throw SemanticError("link '" + link.name +
                          "' needs a <visual> or <collision> geometry" +
                          Where(e));
    }
    link.geometry = ReadGeometry(visual ? *visual : *collision, link.name);
    if (visual && collision &&
        !SameGeometry(link.geometry, ReadGeometry(*collision, link.name))) {
      Warn("link '" + link.name +
           "': collision geometry differs from visual; visual kept");
    }
    for (const auto& child : e.children) {
      if (child.name != "inertial" && child.name != "visual" &&
          child.name != "collision") {
        Warn("link '" + link.name + "': ignored element <" + child.name +
             ">" + Where(child));
      }
    }
    return link;
  }

  JointSpec ReadJoint(const xml::Element& e) {
    JointSpec joint;
    joint.name = std::string(RequireAttr(e, "name"));
    const auto type = RequireAttr(e, "type");
    const auto kind = JointKindFromName(type);
    if (!kind) {
      throw SemanticError("joint '" + joint.name +
                          "': unsupported joint type '" + std::string(type) +
                          "'" + Where(e));
    }
    joint.kind = *kind;
    const auto* parent = e.FirstChild("parent");
    const auto* child = e.FirstChild("child");
    if (parent == nullptr || child == nullptr) {
      throw SemanticError("joint '" + joint.name +
                          "' needs <parent> and <child>" + Where(e));
    }
    joint.parent = std::string(RequireAttr(*parent, "link"));
    joint.child = std::string(RequireAttr(*child, "link"));
    joint.origin = Origin(&e);
    if (const auto* axis = e.FirstChild("axis")) {
      joint.axis = Vector(*axis, "xyz", {1.0, 0.0, 0.0});
    }
    const auto* limit = e.FirstChild("limit");
    if (joint.kind == JointKind::kRevolute) {
      if (limit == nullptr) {
        throw SemanticError("revolute joint '" + joint.name +
                            "' is missing <limit>" + Where(e));
      }
      joint.limit = JointLimit{Number(*limit, "lower"),
                               Number(*limit, "upper")};
    } else if (limit != nullptr) {
      Warn("joint '" + joint.name + "': <limit> ignored on " +
           std::string(type) + " joint" + Where(*limit));
    }
    for (const auto& c : e.children) {
      if (c.name != "parent" && c.name != "child" && c.name != "origin" &&
          c.name != "axis" && c.name != "limit") {
        Warn("joint '" + joint.name + "': ignored element <" + c.name + ">" +
             Where(c));
      }
    }
    return joint;
  }

  static Dimensions DeriveDimensions(const RobotModel& model) {
    const LinkSpec* base = model.FindLink("base_link");
    const LinkSpec* wheel = model.FindLink("rl_wheel");
    const JointSpec* steer = model.FindJoint("base2lstr");
    const JointSpec* axle = model.FindJoint("rl_axle");
    if (base == nullptr || wheel == nullptr || steer == nullptr ||
        axle == nullptr) {
      throw SemanticError(
          "cannot derive dimensions: base_link, rl_wheel, base2lstr, and "
          "rl_axle are required");
    }
    const auto* shell = std::get_if<BoxGeometry>(&base->geometry);
    const auto* tire = std::get_if<CylinderGeometry>(&wheel->geometry);
    if (shell == nullptr || tire == nullptr) {
      throw SemanticError(
          "cannot derive dimensions: base_link must be a box and rl_wheel a "
          "cylinder");
    }
    Dimensions d;
    d.wheel_radius = tire->radius;
    d.shell_length = shell->length;
    d.shell_width = shell->width;
    d.shell_height = shell->depth;
    d.total_height = QuantizeFixed6(base->origin.xyz.z + shell->depth / 2.0 +
                                    tire->radius);
    d.wheelbase = steer->origin.xyz.x;
    d.track_width = QuantizeFixed6(2.0 * axle->origin.xyz.y);
    return d;
  }

  UrdfParseResult result_;
};

std::string DescribeViolations(const std::vector<Violation>& violations) {
  std::string message = "invalid robot model:";
  for (const auto& v : violations) {
    message += "\n  " + v.element + ": " + v.rule;
  }
  return message;
}

}  // namespace

ModelValidationError::ModelValidationError(std::vector<Violation> violations)
    : SemanticError(DescribeViolations(violations)),
      violations_(std::move(violations)) {}

std::string EmitUrdf(const RobotModel& model) {
  if (auto violations = ValidateModel(model); !violations.empty()) {
    throw ModelValidationError(std::move(violations));
  }
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<robot" << Attr("name", model.name) << ">\n";
  for (const auto& link : model.links) EmitLink(link, out);
  for (const auto& link : model.sensor_links) EmitLink(link, out);
  for (const auto& joint : model.joints) EmitJoint(joint, out);
  out << "</robot>\n";
  return out.str();
}

UrdfParseResult ParseUrdf(std::string_view text) {
  const xml::Element root = xml::Parse(text);
  return UrdfReader().Read(root);
}

}  // namespace zebrat
