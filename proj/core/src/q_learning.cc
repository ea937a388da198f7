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

#include "zebrat/q_learning.h"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "zebrat/errors.h"
#include "zebrat/format.h"

namespace zebrat {
namespace {

std::string Shortest(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

}  // namespace

int ObservationDiscretizer::NumStates(int sectors) const {
  int states = static_cast<int>(heading_edges.size()) + 1;
  for (int i = 0; i < sectors; ++i) states *= 3;
  return states;
}

int ObservationDiscretizer::StateId(const Observation& obs) const {
  int id = 0;
  for (double range : obs.sectors) {
    id = id * 3 + (range < near ? 0 : range < far ? 1 : 2);
  }
  const auto bin = std::upper_bound(heading_edges.begin(), heading_edges.end(),
                                    obs.heading_error) -
                   heading_edges.begin();
  return id * (static_cast<int>(heading_edges.size()) + 1) +
         static_cast<int>(bin);
}

AlleyTask::AlleyTask(AlleyEnvConfig config, ObservationDiscretizer discretizer)
    : env_(std::move(config)), discretizer_(std::move(discretizer)) {}

int AlleyTask::num_states() const {
  return discretizer_.NumStates(env_.config().sectors);
}

int AlleyTask::Reset(std::uint64_t seed) {
  return discretizer_.StateId(env_.Reset(seed));
}

Transition AlleyTask::Step(int action) {
  const StepResult step = env_.Step(action);
  return {discretizer_.StateId(step.observation), step.reward, step.done,
          step.reason == Termination::kGoal};
}

QTable::QTable(int num_states, int num_actions)
    : num_states_(num_states),
      num_actions_(num_actions),
      values_(static_cast<std::size_t>(num_states) * num_actions, 0.0) {
  if (num_states < 1 || num_actions < 1) {
    throw InvalidParameterError("Q table needs at least one state and action");
  }
}

double QTable::Get(int state, int action) const {
  return values_[static_cast<std::size_t>(state) * num_actions_ + action];
}

void QTable::Set(int state, int action, double value) {
  values_[static_cast<std::size_t>(state) * num_actions_ + action] = value;
}

double QTable::MaxValue(int state) const {
  return Get(state, Greedy(state));
}

int QTable::Greedy(int state) const {
  int best = 0;
  for (int a = 1; a < num_actions_; ++a) {
    if (Get(state, a) > Get(state, best)) best = a;
  }
  return best;
}

void QTable::Write(std::ostream& out) const {
  for (int s = 0; s < num_states_; ++s) {
    for (int a = 0; a < num_actions_; ++a) {
      const double q = Get(s, a);
      if (q != 0.0) out << s << ' ' << a << ' ' << Shortest(q) << '\n';
    }
  }
}

QTable QTable::Read(std::istream& in, int num_states, int num_actions) {
  QTable table(num_states, num_actions);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    std::istringstream fields(line);
    long s = -1;
    long a = -1;
    std::string text;
    double q = 0.0;
    if (!(fields >> s >> a >> text) || !ParseDouble(text, &q) || s < 0 ||
        s >= num_states || a < 0 || a >= num_actions) {
      throw ParseError("expected 'state_id action_id q_value'", line_no, 1);
    }
    table.Set(static_cast<int>(s), static_cast<int>(a), q);
  }
  return table;
}

void ValidateQLearningConfig(const QLearningConfig& cfg) {
  if (!(cfg.alpha > 0.0 && cfg.alpha <= 1.0)) {
    throw ConfigurationError("alpha must be in (0, 1]");
  }
  if (!(cfg.gamma >= 0.0 && cfg.gamma <= 1.0)) {
    throw ConfigurationError("gamma must be in [0, 1]");
  }
  if (!(cfg.epsilon_start >= 0.0 && cfg.epsilon_start <= 1.0) ||
      !(cfg.epsilon_end >= 0.0 && cfg.epsilon_end <= 1.0) ||
      !(cfg.epsilon_decay_fraction >= 0.0 &&
        cfg.epsilon_decay_fraction <= 1.0)) {
    throw ConfigurationError("epsilon schedule must lie in [0, 1]");
  }
  if (cfg.episodes < 1) throw ConfigurationError("episodes must be >= 1");
}

double EpsilonAt(const QLearningConfig& cfg, int episode) {
  const double decay_episodes = cfg.epsilon_decay_fraction * cfg.episodes;
  if (decay_episodes <= 0.0 || episode >= decay_episodes) {
    return cfg.epsilon_end;
  }
  const double f = episode / decay_episodes;
  return cfg.epsilon_start + (cfg.epsilon_end - cfg.epsilon_start) * f;
}

std::uint64_t EpisodeSeed(std::uint64_t seed, std::uint64_t episode) {
  // splitmix64 of the combined key.
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ull + episode + 1;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

TrainingResult QLearningTrain(TabularTask& task, const QLearningConfig& cfg) {
  ValidateQLearningConfig(cfg);
  TrainingResult result{QTable(task.num_states(), task.num_actions()), {}};
  QTable& q = result.q;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> any_action(0, task.num_actions() - 1);
  result.curve.reserve(cfg.episodes);
  for (int episode = 0; episode < cfg.episodes; ++episode) {
    const double epsilon = EpsilonAt(cfg, episode);
    int state = task.Reset(EpisodeSeed(cfg.seed, episode));
    EpisodeRecord record{episode, 0.0, false};
    for (;;) {
      const int action =
          coin(rng) < epsilon ? any_action(rng) : q.Greedy(state);
      const Transition t = task.Step(action);
      const double bootstrap = t.done ? 0.0 : cfg.gamma * q.MaxValue(t.next_state);
      const double old = q.Get(state, action);
      q.Set(state, action, old + cfg.alpha * (t.reward + bootstrap - old));
      record.ret += t.reward;
      state = t.next_state;
      if (t.done) {
        record.success = t.success;
        break;
      }
    }
    result.curve.push_back(record);
  }
  return result;
}

EvaluationResult EvaluateGreedy(TabularTask& task, const QTable& q,
                                int episodes, std::uint64_t seed) {
  EvaluationResult result;
  int successes = 0;
  double total = 0.0;
  for (int episode = 0; episode < episodes; ++episode) {
    int state = task.Reset(EpisodeSeed(seed, episode));
    EpisodeRecord record{episode, 0.0, false};
    for (;;) {
      const Transition t = task.Step(q.Greedy(state));
      record.ret += t.reward;
      state = t.next_state;
      if (t.done) {
        record.success = t.success;
        break;
      }
    }
    successes += record.success ? 1 : 0;
    total += record.ret;
    result.episodes.push_back(record);
  }
  if (episodes > 0) {
    result.success_rate = static_cast<double>(successes) / episodes;
    result.mean_return = total / episodes;
  }
  return result;
}

void WriteLearningCurve(std::ostream& out,
                        const std::vector<EpisodeRecord>& curve) {
  out << "episode,return,success\n";
  for (const auto& r : curve) {
    out << r.episode << ',' << FormatFixed6(r.ret) << ','
        << (r.success ? 1 : 0) << '\n';
  }
}

}  // namespace zebrat
