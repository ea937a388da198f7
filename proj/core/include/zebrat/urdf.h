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

#ifndef ZEBRAT_URDF_H_
#define ZEBRAT_URDF_H_

#include <string>
#include <string_view>
#include <vector>

#include "zebrat/errors.h"
#include "zebrat/robot_model.h"

namespace zebrat {

// Raised when asked to emit a model that fails ValidateModel().
class ModelValidationError : public SemanticError {
 public:
  explicit ModelValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Serializes a valid model as URDF XML. Links are written in model order
// followed by sensor links; joints in model order. Every number is printed
// with six decimals. Visual and collision elements share the primitive
// geometry of the link.
std::string EmitUrdf(const RobotModel& model);

struct UrdfParseResult {
  RobotModel model;
  // Elements and attributes that were skipped.
  std::vector<std::string> warnings;
};

// Inverse of EmitUrdf. Dimensions are recovered from the body shell, wheel,
// and joint placements. Throws ParseError (line/column) for malformed XML and
// SemanticError for documents that do not describe a supported robot.
UrdfParseResult ParseUrdf(std::string_view text);

}  // namespace zebrat

#endif  // ZEBRAT_URDF_H_
