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

#ifndef ZEBRAT_TRAJECTORY_LOG_H_
#define ZEBRAT_TRAJECTORY_LOG_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "zebrat/kinematics.h"

namespace zebrat {

// One row of `t,x,y,theta,v,phi`. The control is the one that produced the
// pose (zero for the initial row).
struct TrajectoryRow {
  double t = 0.0;
  KinematicState state;
  ControlInput control;
};

inline constexpr char kTrajectoryHeader[] = "t,x,y,theta,v,phi";

void WriteTrajectoryCsv(std::ostream& out,
                        const std::vector<TrajectoryRow>& rows);
// Throws std::runtime_error on I/O failure.
void WriteTrajectoryCsv(const std::filesystem::path& path,
                        const std::vector<TrajectoryRow>& rows);
// Throws ParseError on a bad header or row.
std::vector<TrajectoryRow> ReadTrajectoryCsv(std::istream& in);

// Piecewise-constant control schedule: each row holds from its time until
// the next row's time.
struct ControlKnot {
  double t = 0.0;
  ControlInput control;
};

// Reads `t,v,phi` rows (header required). Times must start at 0 and strictly
// increase. Throws ParseError.
std::vector<ControlKnot> ReadControlSchedule(std::istream& in);

// Open-loop integration of a schedule sampled every params.time_step until
// `end_time`. The first row is the initial state.
std::vector<TrajectoryRow> SimulateSchedule(
    const std::vector<ControlKnot>& schedule, const KinematicState& start,
    double end_time, const KinematicParams& params);

}  // namespace zebrat

#endif  // ZEBRAT_TRAJECTORY_LOG_H_
