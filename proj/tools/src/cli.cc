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

#include "cli.h"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "plot.h"
#include "zebrat/errors.h"
#include "zebrat/format.h"
#include "zebrat/navigation.h"
#include "zebrat/q_learning.h"
#include "zebrat/robot_model.h"
#include "zebrat/robot_spec.h"
#include "zebrat/scenarios.h"
#include "zebrat/server.h"
#include "zebrat/trajectory_log.h"
#include "zebrat/urdf.h"
#include "zebrat/world.h"

namespace zebrat::tools {
namespace fs = std::filesystem;
namespace {

// Raised for argument problems CLI11 cannot express.
struct UsageError {
  std::string message;
};

std::vector<double> ParseTuple(const std::string& text, std::size_t min_n,
                               std::size_t max_n, const std::string& flag) {
  std::vector<double> values;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    double v = 0.0;
    if (!ParseDouble(rest.substr(0, comma), &v)) break;
    values.push_back(v);
    if (comma == std::string_view::npos) {
      if (values.size() >= min_n && values.size() <= max_n) return values;
      break;
    }
    rest.remove_prefix(comma + 1);
  }
  throw UsageError{flag + " expects " +
                   (min_n == max_n ? std::string("X,Y")
                                   : std::string("X,Y[,THETA]")) +
                   ", got '" + text + "'"};
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  f.flush();
  if (!f) throw std::runtime_error("cannot write " + path.string());
}

fs::path PrepareOutDir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw UsageError{"cannot create output directory '" + dir + "'"};
  }
  return fs::path(dir);
}

struct Globals {
  std::uint64_t seed = 0;
  std::string out = ".";
};

void AddGlobals(CLI::App& app, Globals& g, bool with_out = true) {
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  if (with_out) {
    app.add_option("--out", g.out, "Output directory")->capture_default_str();
  }
}

int UrdfGen(const std::string& spec_path, const std::string& out_path,
            bool with_sensors, std::ostream& out) {
  RobotSpec spec;
  if (!spec_path.empty()) spec = LoadRobotSpec(spec_path);
  ModelOptions options;
  options.include_sensors = with_sensors;
  const RobotModel model =
      BuildCanonicalModel(spec.dimensions, spec.masses, options);
  const std::string xml = EmitUrdf(model);
  if (out_path.empty()) {
    out << xml;
  } else {
    WriteText(out_path, xml);
    out << "wrote " << out_path << '\n';
  }
  return kExitOk;
}

int UrdfCheck(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream text;
  text << f.rdbuf();
  const UrdfParseResult parsed = ParseUrdf(text.str());
  for (const auto& w : parsed.warnings) err << "warning: " << w << '\n';
  const auto violations = ValidateModel(parsed.model);
  for (const auto& v : violations) {
    err << path << ": " << v.element << ": " << v.rule << '\n';
  }
  if (!violations.empty()) return kExitDomainError;
  int revolute = 0;
  for (const auto& j : parsed.model.joints) {
    if (j.kind == JointKind::kRevolute) ++revolute;
  }
  out << path << ": ok (" << parsed.model.links.size() << " links, "
      << parsed.model.joints.size() << " joints, " << revolute
      << " revolute, " << parsed.model.sensor_links.size()
      << " sensor links)\n";
  return kExitOk;
}

int Sim(const std::string& controls, std::optional<double> duration,
        const std::string& start_text, const fs::path& out_dir,
        std::ostream& out) {
  const auto start = ParseTuple(start_text, 3, 3, "--start");
  std::ifstream f(controls, std::ios::binary);
  const auto schedule = ReadControlSchedule(f);
  const double end = duration.value_or(schedule.back().t);
  if (!(end > 0.0)) {
    throw UsageError{
        "the schedule's last row is at t=0; pass --duration to set the end"};
  }
  const auto rows = SimulateSchedule(schedule, {start[0], start[1], start[2]},
                                     end, KinematicParams{});
  WriteTrajectoryCsv(out_dir / "trajectory.csv", rows);
  const auto& last = rows.back().state;
  out << "simulated " << rows.size() - 1 << " steps; final pose "
      << FormatFixed6(last.x) << ' ' << FormatFixed6(last.y) << ' '
      << FormatFixed6(last.theta) << '\n';
  return kExitOk;
}

int NavigateCmd(const std::string& world, const std::string& start_text,
                const std::string& goal_text, const std::string& planner,
                int max_steps, const fs::path& out_dir, std::ostream& out,
                std::ostream& err) {
  const auto s = ParseTuple(start_text, 2, 3, "--start");
  const auto g = ParseTuple(goal_text, 2, 2, "--goal");
  const OccupancyGrid grid = LoadGrid(world);
  NavigationConfig cfg;
  cfg.planner = *PlannerKindFromName(planner);
  cfg.max_steps = max_steps;
  const std::optional<double> heading =
      s.size() == 3 ? std::optional<double>(s[2]) : std::nullopt;
  const Point2 goal{g[0], g[1]};
  const NavigationResult result =
      Navigate(grid, Footprint{}, {s[0], s[1]}, heading, goal, cfg);
  if (result.status == NavigationStatus::kUnreachable) {
    err << "goal unreachable\n";
    return kExitDomainError;
  }
  WriteTrajectoryCsv(out_dir / "trajectory.csv", result.trajectory);
  std::string path_csv = "x,y\n";
  for (const auto& p : result.global_path) {
    path_csv += FormatFixed6(p.x) + "," + FormatFixed6(p.y) + "\n";
  }
  WriteText(out_dir / "path.csv", path_csv);
  WriteText(out_dir / "navigate.svg",
            NavigationSvg(grid, result.global_path, result.trajectory, goal));
  const auto& last = result.trajectory.back();
  out << NavigationStatusName(result.status) << " after "
      << result.trajectory.size() - 1 << " steps (t=" << FormatFixed6(last.t)
      << "); final distance " << FormatFixed6(result.final_distance)
      << " m; planner expansions " << result.expansions << '\n';
  if (result.status != NavigationStatus::kReached) {
    err << "navigation failed: " << NavigationStatusName(result.status)
        << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

int Train(int episodes, int eval_episodes, std::uint64_t seed,
          const fs::path& out_dir, std::ostream& out) {
  AlleyTask task;
  QLearningConfig cfg;
  cfg.episodes = episodes;
  cfg.seed = seed;
  const TrainingResult trained = QLearningTrain(task, cfg);
  {
    std::ofstream f(out_dir / "learning_curve.csv", std::ios::binary);
    WriteLearningCurve(f, trained.curve);
    if (!f) throw std::runtime_error("cannot write learning_curve.csv");
  }
  WriteText(out_dir / "learning_curve.svg", LearningCurveSvg(trained.curve));
  {
    std::ofstream f(out_dir / "policy.txt", std::ios::binary);
    trained.q.Write(f);
    if (!f) throw std::runtime_error("cannot write policy.txt");
  }
  const EvaluationResult eval = EvaluateGreedy(
      task, trained.q, eval_episodes, kEvaluationSeedOffset + seed);
  out << "trained " << episodes << " episodes; greedy success rate "
      << FormatFixed6(eval.success_rate) << " over " << eval_episodes
      << " episodes; mean return " << FormatFixed6(eval.mean_return) << '\n';
  return kExitOk;
}

int WorldCmd(const std::string& kind, double width, double length,
             std::uint64_t seed, const fs::path& out_dir, std::ostream& out) {
  Scenario scenario = [&] {
    if (kind == "urban") {
      UrbanConfig cfg;
      cfg.seed = seed;
      return BuildUrban(cfg);
    }
    AlleyConfig cfg;
    cfg.width = width;
    cfg.length = length;
    return BuildAlley(cfg);
  }();
  const fs::path path = out_dir / (kind + ".world");
  SaveGrid(scenario.grid, path);
  out << "wrote " << path.string() << "; start " << FormatFixed6(scenario.start.x)
      << ',' << FormatFixed6(scenario.start.y) << ','
      << FormatFixed6(scenario.start.theta) << " goal "
      << FormatFixed6(scenario.goal.x) << ',' << FormatFixed6(scenario.goal.y)
      << '\n';
  return kExitOk;
}

int Serve(const std::string& bind, const std::string& scenario,
          std::uint64_t seed, const std::string& log_dir, std::ostream& out) {
  ServerOptions options;
  try {
    std::tie(options.host, options.port) = ParseBindAddress(bind);
  } catch (const InvalidParameterError& e) {
    throw UsageError{e.what()};
  }
  options.session.scenario = scenario;
  options.session.seed = seed;
  if (!log_dir.empty()) options.session.log_dir = PrepareOutDir(log_dir);
  Server server(options);
  out << "listening on " << options.host << ':' << server.port() << std::endl;
  server.Run();
  out << "shut down\n";
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"ZebraT robot simulator toolkit", "zebrat"};
  app.require_subcommand(1);
  app.fallthrough();
  app.failure_message(CLI::FailureMessage::help);
  Globals globals;
  AddGlobals(app, globals);

  auto* urdf = app.add_subcommand("urdf", "Emit or validate a robot description");
  urdf->require_subcommand(1);
  std::string spec_path, urdf_out, urdf_file;
  auto* gen = urdf->add_subcommand("gen", "Write the URDF for a robot spec");
  gen->add_option("--spec", spec_path, "Robot spec (TOML subset)")
      ->check(CLI::ExistingFile);
  gen->add_option("--out", urdf_out, "Output file (stdout when omitted)");
  bool with_sensors = false;
  gen->add_flag("--with-sensors", with_sensors,
                "Attach lidar, camera, and imu placeholder links");
  auto* check = urdf->add_subcommand("check", "Validate a URDF file");
  check->add_option("file", urdf_file, "URDF file")
      ->required()
      ->check(CLI::ExistingFile);

  auto* sim = app.add_subcommand("sim", "Open-loop run of a control schedule");
  std::string controls, sim_start = "0,0,0";
  std::optional<double> duration;
  sim->add_option("--controls", controls, "CSV schedule with t,v,phi rows")
      ->required()
      ->check(CLI::ExistingFile);
  sim->add_option("--duration", duration,
                  "End time in s (default: time of the last row)")
      ->check(CLI::PositiveNumber);
  sim->add_option("--start", sim_start, "Initial pose X,Y,THETA")
      ->capture_default_str();
  AddGlobals(*sim, globals);

  auto* nav = app.add_subcommand("navigate", "Global planning plus local control");
  std::string world, nav_start, nav_goal, planner = "astar";
  int max_steps = NavigationConfig{}.max_steps;
  nav->add_option("--world", world, "Occupancy grid file")
      ->required()
      ->check(CLI::ExistingFile);
  nav->add_option("--start", nav_start, "Start X,Y[,THETA]")->required();
  nav->add_option("--goal", nav_goal, "Goal X,Y")->required();
  nav->add_option("--planner", planner, "Global planner")
      ->check(CLI::IsMember({"astar", "dijkstra"}))
      ->capture_default_str();
  nav->add_option("--max-steps", max_steps, "Control step budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  AddGlobals(*nav, globals);

  auto* train = app.add_subcommand("train", "Tabular Q-learning on the alley task");
  int episodes = QLearningConfig{}.episodes;
  int eval_episodes = 100;
  train->add_option("--episodes", episodes, "Training episodes")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train->add_option("--eval-episodes", eval_episodes, "Greedy evaluation episodes")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  AddGlobals(*train, globals);

  auto* serve = app.add_subcommand("serve", "Run the TCP episode server");
  std::string bind = "127.0.0.1:5555", scenario = "alley", log_dir;
  serve->add_option("--bind", bind, "HOST:PORT")->capture_default_str();
  serve->add_option("--scenario", scenario, "Default scenario")
      ->check(CLI::IsMember({"alley", "urban"}))
      ->capture_default_str();
  serve->add_option("--log-dir", log_dir, "Directory for trajectory logs");
  AddGlobals(*serve, globals, false);

  auto* world_cmd = app.add_subcommand("world", "Generate a world file");
  std::string world_kind;
  double alley_width = AlleyConfig{}.width, alley_length = AlleyConfig{}.length;
  world_cmd->add_option("kind", world_kind, "urban or alley")
      ->required()
      ->check(CLI::IsMember({"urban", "alley"}));
  world_cmd->add_option("--width", alley_width, "Alley width (m)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  world_cmd->add_option("--length", alley_length, "Alley length (m)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  AddGlobals(*world_cmd, globals);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageError;
  }

  try {
    if (urdf->parsed()) {
      if (gen->parsed()) return UrdfGen(spec_path, urdf_out, with_sensors, out);
      return UrdfCheck(urdf_file, out, err);
    }
    if (serve->parsed()) {
      return Serve(bind, scenario, globals.seed, log_dir, out);
    }
    const fs::path out_dir = PrepareOutDir(globals.out);
    if (sim->parsed()) return Sim(controls, duration, sim_start, out_dir, out);
    if (nav->parsed()) {
      return NavigateCmd(world, nav_start, nav_goal, planner, max_steps,
                         out_dir, out, err);
    }
    if (train->parsed()) {
      return Train(episodes, eval_episodes, globals.seed, out_dir, out);
    }
    return WorldCmd(world_kind, alley_width, alley_length, globals.seed,
                    out_dir, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.message << '\n';
    return kExitUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
}

}  // namespace zebrat::tools
