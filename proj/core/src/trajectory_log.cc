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

#include "zebrat/trajectory_log.h"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include "zebrat/errors.h"
#include "zebrat/format.h"

namespace zebrat {
namespace {

std::vector<double> SplitNumbers(const std::string& line, std::size_t expected,
                                 std::size_t line_no) {
  std::vector<double> values;
  std::string_view rest = line;
  while (true) {
    const auto comma = rest.find(',');
    double value = 0.0;
    if (!ParseDouble(rest.substr(0, comma), &value)) {
      throw ParseError("expected a number", line_no, 1);
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (values.size() != expected) {
    throw ParseError("expected " + std::to_string(expected) + " columns",
                     line_no, 1);
  }
  return values;
}

std::string StripCr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

void WriteTrajectoryCsv(std::ostream& out,
                        const std::vector<TrajectoryRow>& rows) {
  out << kTrajectoryHeader << '\n';
  for (const auto& row : rows) {
    out << FormatFixed6(row.t) << ',' << FormatFixed6(row.state.x) << ','
        << FormatFixed6(row.state.y) << ',' << FormatFixed6(row.state.theta)
        << ',' << FormatFixed6(row.control.v) << ','
        << FormatFixed6(row.control.phi) << '\n';
  }
}

void WriteTrajectoryCsv(const std::filesystem::path& path,
                        const std::vector<TrajectoryRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  WriteTrajectoryCsv(out, rows);
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::vector<TrajectoryRow> ReadTrajectoryCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || StripCr(line) != kTrajectoryHeader) {
    throw ParseError("expected header '" + std::string(kTrajectoryHeader) +
                         "'",
                     1, 1);
  }
  std::vector<TrajectoryRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = StripCr(line);
    if (line.empty()) continue;
    const auto v = SplitNumbers(line, 6, line_no);
    rows.push_back({v[0], {v[1], v[2], v[3]}, {v[4], v[5]}});
  }
  return rows;
}

std::vector<ControlKnot> ReadControlSchedule(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || StripCr(line) != "t,v,phi") {
    throw ParseError("expected header 't,v,phi'", 1, 1);
  }
  std::vector<ControlKnot> knots;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = StripCr(line);
    if (line.empty()) continue;
    const auto v = SplitNumbers(line, 3, line_no);
    if (knots.empty() ? v[0] != 0.0 : !(v[0] > knots.back().t)) {
      throw ParseError(
          knots.empty() ? "schedule must start at t=0"
                        : "schedule times must strictly increase",
          line_no, 1);
    }
    knots.push_back({v[0], {v[1], v[2]}});
  }
  if (knots.empty()) throw ParseError("empty control schedule", line_no, 1);
  return knots;
}

std::vector<TrajectoryRow> SimulateSchedule(
    const std::vector<ControlKnot>& schedule, const KinematicState& start,
    double end_time, const KinematicParams& params) {
  if (schedule.empty()) {
    throw InvalidParameterError("control schedule is empty");
  }
  std::vector<TrajectoryRow> rows;
  rows.push_back({0.0, start, {}});
  KinematicState state = start;
  std::size_t knot = 0;
  const auto steps =
      static_cast<long>(std::llround(end_time / params.time_step));
  for (long i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) * params.time_step;
    while (knot + 1 < schedule.size() &&
           schedule[knot + 1].t <= t + 1e-12) {
      ++knot;
    }
    const ControlInput u = ClampControl(schedule[knot].control,
                                        params.max_speed);
    state = Step(state, u, params.time_step, params.wheelbase);
    rows.push_back({static_cast<double>(i + 1) * params.time_step, state, u});
  }
  return rows;
}

}  // namespace zebrat
