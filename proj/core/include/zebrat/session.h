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

#ifndef ZEBRAT_SESSION_H_
#define ZEBRAT_SESSION_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "zebrat/kinematics.h"
#include "zebrat/lidar.h"
#include "zebrat/map_share.h"
#include "zebrat/protocol.h"
#include "zebrat/rl_env.h"
#include "zebrat/scenarios.h"
#include "zebrat/world.h"

namespace zebrat {

inline constexpr std::string_view kAdrAgent = "adr";
inline constexpr std::string_view kAvAgent = "av";

// Second agent: same kinematics, larger body and speed limit.
struct AgentProfile {
  Footprint footprint;
  KinematicParams kinematics;
};
AgentProfile AdrProfile();
AgentProfile AvProfile();

struct SessionConfig {
  std::string scenario = "alley";  // used when reset omits "scenario"
  std::uint64_t seed = 0;          // used when reset omits "seed"
  // Alley task for the robot; the exit plaza is deep enough to host the AV.
  AlleyEnvConfig alley = [] {
    AlleyEnvConfig c;
    c.alley.exit_margin = 7.0;
    c.alley.side_margin = 1.5;
    return c;
  }();
  UrbanConfig urban;
  int urban_max_steps = 3000;
  double urban_goal_tolerance = 0.2;  // m
  double av_goal_distance = 2.0;      // m along the AV's spawn heading
  // Trajectory CSVs go here when set, one file per agent and episode.
  std::optional<std::filesystem::path> log_dir;
  std::string log_prefix = "session";
};

// Lock-step episode state machine behind one connection. Every request line
// yields exactly one response line; simulation time moves only on "step".
class Session {
 public:
  explicit Session(SessionConfig config = {});
  ~Session();
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  std::string HandleLine(std::string_view line);
  Response Handle(const Request& request);

  bool shutdown_requested() const { return shutdown_; }
  // Writes logs of episodes still in progress. Returns false on I/O failure.
  bool Close();

 private:
  struct Episode;
  struct Agent;

  Response Reset(const ResetRequest& req);
  Response Step(const StepRequest& req);
  Response Observe(const ObserveRequest& req);
  Response Share(const MapShareRequest& req);
  Agent* FindAgent(std::string_view id);
  bool FlushLog(Agent& agent);

  SessionConfig config_;
  std::unique_ptr<Episode> episode_;
  int episode_count_ = 0;
  bool shutdown_ = false;
};

}  // namespace zebrat

#endif  // ZEBRAT_SESSION_H_
