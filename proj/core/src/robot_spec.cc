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

#include "zebrat/robot_spec.h"

#include <fstream>
#include <sstream>

#include "zebrat/errors.h"
#include "zebrat/format.h"

namespace zebrat {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double* DimensionField(Dimensions& d, std::string_view key) {
  if (key == "wheel_radius") return &d.wheel_radius;
  if (key == "shell_length") return &d.shell_length;
  if (key == "shell_width") return &d.shell_width;
  if (key == "shell_height") return &d.shell_height;
  if (key == "total_height") return &d.total_height;
  if (key == "wheelbase") return &d.wheelbase;
  if (key == "track_width") return &d.track_width;
  return nullptr;
}

}  // namespace

RobotSpec ParseRobotSpec(std::string_view text) {
  RobotSpec spec;
  enum class Section { kNone, kDimensions, kMasses } section = Section::kNone;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ParseError("unterminated section header", line_no, 1);
      }
      const auto name = Trim(line.substr(1, line.size() - 2));
      if (name == "dimensions") {
        section = Section::kDimensions;
      } else if (name == "masses") {
        section = Section::kMasses;
      } else {
        throw ParseError("unknown section [" + std::string(name) + "]",
                         line_no, 1);
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected key = value", line_no, 1);
    }
    const auto key = Trim(line.substr(0, eq));
    const auto raw = Trim(line.substr(eq + 1));
    double value = 0.0;
    if (key.empty() || !ParseDouble(raw, &value)) {
      throw ParseError("invalid entry '" + std::string(line) + "'", line_no,
                       eq + 2);
    }
    switch (section) {
      case Section::kNone:
        throw ParseError("key outside of a section", line_no, 1);
      case Section::kDimensions: {
        double* field = DimensionField(spec.dimensions, key);
        if (field == nullptr) {
          throw ParseError("unknown dimension '" + std::string(key) + "'",
                           line_no, 1);
        }
        *field = value;
        break;
      }
      case Section::kMasses:
        spec.masses[std::string(key)] = value;
        break;
    }
  }
  return spec;
}

RobotSpec LoadRobotSpec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open robot spec " + path.string(), 0, 0);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseRobotSpec(buffer.str());
}

std::string FormatRobotSpec(const RobotSpec& spec) {
  const Dimensions& d = spec.dimensions;
  std::string out = "[dimensions]\n";
  const std::pair<const char*, double> fields[] = {
      {"wheel_radius", d.wheel_radius}, {"shell_length", d.shell_length},
      {"shell_width", d.shell_width},   {"shell_height", d.shell_height},
      {"total_height", d.total_height}, {"wheelbase", d.wheelbase},
      {"track_width", d.track_width}};
  for (const auto& [key, value] : fields) {
    out += std::string(key) + " = " + FormatFixed6(value) + "\n";
  }
  out += "\n[masses]\n";
  for (const auto& [link, mass] : spec.masses) {
    out += link + " = " + FormatFixed6(mass) + "\n";
  }
  return out;
}

}  // namespace zebrat
