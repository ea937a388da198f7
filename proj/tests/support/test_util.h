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

#ifndef ZEBRAT_TESTS_SUPPORT_TEST_UTIL_H_
#define ZEBRAT_TESTS_SUPPORT_TEST_UTIL_H_

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "zebrat/robot_model.h"

namespace zebrat::testing {

// Valid dimensions drawn around the default robot.
Dimensions RandomDimensions(std::mt19937_64& rng);
LinkMasses RandomMasses(std::mt19937_64& rng);

// Empty when names, kinds, topology, and every number agree within `tol`;
// otherwise a description of the first difference.
std::string CompareModels(const RobotModel& a, const RobotModel& b,
                          double tol);

// Fresh empty directory under the system temp dir.
std::filesystem::path TempDir(const std::string& tag);

std::string ReadFile(const std::filesystem::path& path);

// Runs the CLI in-process and captures its streams.
struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};
CliRun RunZebrat(const std::vector<std::string>& args);

}  // namespace zebrat::testing

#endif  // ZEBRAT_TESTS_SUPPORT_TEST_UTIL_H_
