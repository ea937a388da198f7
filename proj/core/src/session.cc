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

#include "zebrat/session.h"

#include <cmath>
#include <exception>
#include <random>
#include <vector>

#include "zebrat/errors.h"
#include "zebrat/format.h"
#include "zebrat/trajectory_log.h"

namespace zebrat {
namespace {

constexpr double kAvLength = 3.8;
constexpr double kAvWidth = 1.8;
constexpr double kAvWheelbase = 2.12;
constexpr double kAvMaxSpeed = 5.0;

ErrorResponse Error(std::string_view code, std::string message) {
  return {std::string(code), std::move(message)};
}

}  // namespace

AgentProfile AdrProfile() { return {Footprint{}, KinematicParams{}}; }

AgentProfile AvProfile() {
  AgentProfile p;
  p.footprint = {kAvLength, kAvWidth, kAvWheelbase / 2.0};
  p.kinematics.wheelbase = kAvWheelbase;
  p.kinematics.max_speed = kAvMaxSpeed;
  return p;
}

struct Session::Agent {
  std::string id;
  AgentProfile profile;
  CollisionChecker checker;
  KnownMap known;
  KinematicState state;
  // Task: advance `goal_distance` along the spawn heading, or reach
  // `goal` within `tolerance` when `point_goal` is set.
  KinematicState origin;
  bool point_goal = false;
  Point2 goal;
  double goal_distance = 0.0;
  double tolerance = 0.0;
  int max_steps = 0;

  int steps = 0;
  bool done = false;
  Termination reason = Termination::kRunning;
  double last_reward = 0.0;
  double total_reward = 0.0;
  bool pending_map = false;
  std::vector<TrajectoryRow> rows;
  bool logged = false;

  Agent(std::string agent_id, AgentProfile p, const OccupancyGrid& grid)
      : id(std::move(agent_id)),
        profile(p),
        checker(grid, p.footprint),
        known(KnownMap::Like(grid)) {}

  double Progress(const KinematicState& s) const {
    if (point_goal) {
      return std::hypot(origin.x - goal.x, origin.y - goal.y) -
             std::hypot(s.x - goal.x, s.y - goal.y);
    }
    return (s.x - origin.x) * std::cos(origin.theta) +
           (s.y - origin.y) * std::sin(origin.theta);
  }
  bool AtGoal(const KinematicState& s) const {
    if (point_goal) return std::hypot(s.x - goal.x, s.y - goal.y) <= tolerance;
    return Progress(s) >= goal_distance;
  }
};

struct Session::Episode {
  explicit Episode(Scenario s) : scenario(std::move(s)) {}

  std::string scenario_name;
  std::uint64_t seed = 0;
  int number = 0;
  Scenario scenario;
  ScanConfig scan;
  int sectors = 8;
  double period = 0.1;
  std::vector<std::unique_ptr<Agent>> agents;
};

Session::Session(SessionConfig config) : config_(std::move(config)) {}

Session::~Session() { Close(); }

std::string Session::HandleLine(std::string_view line) {
  auto parsed = ParseRequest(line);
  if (auto* err = std::get_if<ErrorResponse>(&parsed)) {
    return FormatResponse(*err);
  }
  return FormatResponse(Handle(std::get<Request>(parsed)));
}

Response Session::Handle(const Request& request) {
  try {
    return std::visit(
        [this](const auto& req) -> Response {
          using T = std::decay_t<decltype(req)>;
          if constexpr (std::is_same_v<T, HelloRequest>) {
            return AckResponse{{{"version", std::string(kProtocolVersion)},
                                {"server", std::string("zebrat")}}};
          } else if constexpr (std::is_same_v<T, ResetRequest>) {
            return Reset(req);
          } else if constexpr (std::is_same_v<T, StepRequest>) {
            return Step(req);
          } else if constexpr (std::is_same_v<T, ObserveRequest>) {
            return Observe(req);
          } else if constexpr (std::is_same_v<T, MapShareRequest>) {
            return Share(req);
          } else {
            shutdown_ = true;
            return AckResponse{{{"shutdown", true}}};
          }
        },
        request);
  } catch (const std::exception& e) {
    return Error(wire_error::kBadRequest, e.what());
  }
}

Session::Agent* Session::FindAgent(std::string_view id) {
  if (!episode_) return nullptr;
  for (auto& agent : episode_->agents) {
    if (agent->id == id) return agent.get();
  }
  return nullptr;
}

bool Session::FlushLog(Agent& agent) {
  if (agent.logged || !config_.log_dir) return true;
  agent.logged = true;
  const auto path = *config_.log_dir / (config_.log_prefix + "_ep" +
                                        std::to_string(episode_->number) +
                                        "_" + agent.id + ".csv");
  try {
    WriteTrajectoryCsv(path, agent.rows);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

bool Session::Close() {
  if (!episode_) return true;
  bool ok = true;
  for (auto& agent : episode_->agents) ok = FlushLog(*agent) && ok;
  return ok;
}

Response Session::Reset(const ResetRequest& req) {
  const bool flushed = Close();
  const std::string name = req.scenario.value_or(config_.scenario);
  if (name != "alley" && name != "urban") {
    return Error(wire_error::kBadRequest,
                 "scenario must be \"alley\" or \"urban\"");
  }
  const std::uint64_t seed = req.seed.value_or(config_.seed);
  const int num_agents = req.agents.value_or(1);

  const AgentProfile adr_profile = {config_.alley.alley.footprint,
                                    config_.alley.kinematics};
  const AgentProfile av_profile = AvProfile();
  KinematicState adr_start;
  std::optional<KinematicState> av_start;
  std::unique_ptr<Episode> episode;
  if (name == "alley") {
    episode = std::make_unique<Episode>(BuildAlley(config_.alley.alley));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const double lateral =
        QuantizeFixed6(config_.alley.lateral_jitter * unit(rng));
    const double heading =
        QuantizeFixed6(config_.alley.heading_jitter * unit(rng));
    adr_start = episode->scenario.start;
    adr_start.y += lateral;
    adr_start.theta = NormalizeAngle(adr_start.theta + heading);
    if (num_agents == 2) {
      // Exit plaza, facing away from the alley.
      av_start = KinematicState{config_.alley.alley.length + 1.0, 0.0, 0.0};
    }
  } else {
    UrbanConfig urban = config_.urban;
    urban.seed = seed;
    urban.footprint = adr_profile.footprint;
    episode = std::make_unique<Episode>(BuildUrban(urban));
    adr_start = episode->scenario.start;
    if (num_agents == 2) {
      // First collision-free spot along the bottom road, facing +x.
      const CollisionChecker probe(episode->scenario.grid,
                                   av_profile.footprint);
      const double y = urban.road_width / 2.0;
      for (double x = urban.road_width + urban.block_size;
           x < urban.blocks_x * (urban.block_size + urban.road_width); x += 0.5) {
        const KinematicState candidate{x, y, 0.0};
        if (!probe.Collides(candidate)) {
          av_start = candidate;
          break;
        }
      }
      if (!av_start) {
        return Error(wire_error::kBadRequest,
                     "no collision-free spawn for the second agent");
      }
    }
  }
  episode->scenario_name = name;
  episode->seed = seed;
  episode->number = episode_count_ + 1;
  episode->scan = config_.alley.scan;
  episode->sectors = config_.alley.sectors;
  episode->period = config_.alley.control_period;

  const OccupancyGrid& grid = episode->scenario.grid;
  auto adr = std::make_unique<Agent>(std::string(kAdrAgent), adr_profile, grid);
  adr->origin = episode->scenario.start;
  if (name == "alley") {
    adr->goal_distance = config_.alley.alley.length;
    adr->max_steps = config_.alley.max_steps;
  } else {
    adr->point_goal = true;
    adr->goal = {episode->scenario.goal.x, episode->scenario.goal.y};
    adr->tolerance = config_.urban_goal_tolerance;
    adr->max_steps = config_.urban_max_steps;
  }
  adr->state = adr_start;
  episode->agents.push_back(std::move(adr));
  if (av_start) {
    auto av = std::make_unique<Agent>(std::string(kAvAgent), av_profile, grid);
    av->origin = *av_start;
    av->state = *av_start;
    av->goal_distance = config_.av_goal_distance;
    av->max_steps = name == "alley" ? config_.alley.max_steps
                                    : config_.urban_max_steps;
    const double gap = std::hypot(av_start->x - adr_start.x,
                                  av_start->y - adr_start.y);
    if (gap <= adr_profile.footprint.CircumRadius() +
                   av_profile.footprint.offset +
                   av_profile.footprint.CircumRadius()) {
      return Error(wire_error::kBadRequest, "agents spawn too close");
    }
    episode->agents.push_back(std::move(av));
  }
  for (auto& agent : episode->agents) {
    if (agent->checker.Collides(agent->state)) {
      return Error(wire_error::kBadRequest,
                   "agent '" + agent->id + "' spawns in collision");
    }
    agent->known.Integrate(grid, agent->state, episode->scan);
    agent->rows.push_back({0.0, agent->state, {}});
  }

  episode_ = std::move(episode);
  ++episode_count_;
  if (!flushed) {
    return Error(wire_error::kIoError,
                 "could not write the previous episode's trajectory log");
  }
  std::string ids;
  for (const auto& agent : episode_->agents) {
    if (!ids.empty()) ids += ',';
    ids += agent->id;
  }
  return AckResponse{{{"version", std::string(kProtocolVersion)},
                      {"scenario", name},
                      {"seed", static_cast<std::int64_t>(seed)},
                      {"agents", ids},
                      {"episode", static_cast<std::int64_t>(episode_->number)},
                      {"width", static_cast<std::int64_t>(grid.width())},
                      {"height", static_cast<std::int64_t>(grid.height())},
                      {"resolution", grid.resolution()}}};
}

namespace {

StateResponse MakeState(std::string_view id, int steps,
                        const KinematicState& s, std::vector<double> sectors,
                        double reward, double total, bool done,
                        Termination reason) {
  StateResponse out;
  out.agent = std::string(id);
  out.step = steps;
  out.x = s.x;
  out.y = s.y;
  out.theta = s.theta;
  out.sectors = std::move(sectors);
  out.reward = reward;
  out.total_reward = total;
  out.done = done;
  out.reason = std::string(TerminationName(reason));
  return out;
}

}  // namespace

Response Session::Step(const StepRequest& req) {
  if (!episode_) return Error(wire_error::kNoSession, "step before reset");
  Agent* agent = FindAgent(req.agent);
  if (!agent) {
    return Error(wire_error::kUnknownAgent, "unknown agent '" + req.agent + "'");
  }
  if (agent->done) {
    return Error(wire_error::kEpisodeDone,
                 "agent '" + agent->id + "' finished its episode");
  }
  const KinematicParams& kin = agent->profile.kinematics;
  const ControlInput u = ClampControl(
      {QuantizeFixed6(req.v), QuantizeFixed6(req.phi)}, kin.max_speed);
  const double before = agent->Progress(agent->state);
  // Poses live on the same 1e-6 lattice as the log, so the CSV is exact.
  KinematicState next = Advance(agent->state, u, episode_->period, kin);
  next = {QuantizeFixed6(next.x), QuantizeFixed6(next.y),
          QuantizeFixed6(next.theta)};
  ++agent->steps;
  Termination reason = Termination::kRunning;
  if (agent->checker.Collides(next)) {
    reason = Termination::kCollision;
  } else {
    agent->state = next;
    if (agent->AtGoal(agent->state)) {
      reason = Termination::kGoal;
    } else if (agent->steps >= agent->max_steps) {
      reason = Termination::kTimeout;
    }
  }
  const OccupancyGrid& grid = episode_->scenario.grid;
  agent->known.Integrate(grid, agent->state, episode_->scan);
  agent->last_reward = Reward(before, agent->Progress(agent->state), reason);
  agent->total_reward += agent->last_reward;
  agent->reason = reason;
  agent->done = reason != Termination::kRunning;
  agent->rows.push_back(
      {agent->steps * episode_->period, agent->state, u});
  if (agent->done && !FlushLog(*agent)) {
    return Error(wire_error::kIoError,
                 "could not write the trajectory log for '" + agent->id + "'");
  }
  return MakeState(
      agent->id, agent->steps, agent->state,
      Downsample(RaycastScan(grid, agent->state, episode_->scan),
                 episode_->sectors),
      agent->last_reward, agent->total_reward, agent->done, agent->reason);
}

Response Session::Observe(const ObserveRequest& req) {
  if (!episode_) return Error(wire_error::kNoSession, "observe before reset");
  Agent* agent = FindAgent(req.agent);
  if (!agent) {
    return Error(wire_error::kUnknownAgent, "unknown agent '" + req.agent + "'");
  }
  if (req.map || agent->pending_map) {
    agent->pending_map = false;
    const KnownMap& m = agent->known;
    return MapResponse{agent->id,     m.width(),    m.height(),
                       m.resolution(), m.origin_x(), m.origin_y(),
                       m.EncodeRle()};
  }
  return MakeState(
      agent->id, agent->steps, agent->state,
      Downsample(RaycastScan(episode_->scenario.grid, agent->state,
                             episode_->scan),
                 episode_->sectors),
      0.0, agent->total_reward, agent->done, agent->reason);
}

Response Session::Share(const MapShareRequest& req) {
  if (!episode_) return Error(wire_error::kNoSession, "map_share before reset");
  Agent* from = FindAgent(req.from);
  if (!from) {
    return Error(wire_error::kUnknownAgent, "unknown agent '" + req.from + "'");
  }
  Agent* to = FindAgent(req.to);
  if (!to) {
    return Error(wire_error::kUnknownAgent, "unknown agent '" + req.to + "'");
  }
  if (from == to) {
    return Error(wire_error::kInvalidTarget, "an agent cannot share with itself");
  }
  const std::size_t changed = to->known.MergeFrom(from->known);
  to->pending_map = true;
  return AckResponse{{{"from", from->id},
                      {"to", to->id},
                      {"changed", static_cast<std::int64_t>(changed)}}};
}

}  // namespace zebrat
