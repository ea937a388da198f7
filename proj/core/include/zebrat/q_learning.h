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

#ifndef ZEBRAT_Q_LEARNING_H_
#define ZEBRAT_Q_LEARNING_H_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "zebrat/rl_env.h"

namespace zebrat {

// Maps a continuous observation to a tabular state id: every sector range is
// binned into near / mid / far and the heading error into five bins.
struct ObservationDiscretizer {
  double near = 0.5;  // m
  double far = 1.5;   // m
  // Four ascending edges delimiting the five heading bins.
  std::vector<double> heading_edges = {-0.15, -0.05, 0.05, 0.15};

  int NumStates(int sectors) const;
  int StateId(const Observation& obs) const;
};

struct Transition {
  int next_state = 0;
  double reward = 0.0;
  bool done = false;
  bool success = false;
};

// Episodic task with discrete states and actions.
class TabularTask {
 public:
  virtual ~TabularTask() = default;
  virtual int num_states() const = 0;
  virtual int num_actions() const = 0;
  virtual int Reset(std::uint64_t seed) = 0;
  virtual Transition Step(int action) = 0;
};

// The alley environment seen through an ObservationDiscretizer.
class AlleyTask : public TabularTask {
 public:
  explicit AlleyTask(AlleyEnvConfig config = {},
                     ObservationDiscretizer discretizer = {});

  int num_states() const override;
  int num_actions() const override { return env_.num_actions(); }
  int Reset(std::uint64_t seed) override;
  Transition Step(int action) override;

  const AlleyEnv& env() const { return env_; }

 private:
  AlleyEnv env_;
  ObservationDiscretizer discretizer_;
};

class QTable {
 public:
  QTable(int num_states, int num_actions);

  int num_states() const { return num_states_; }
  int num_actions() const { return num_actions_; }
  double Get(int state, int action) const;
  void Set(int state, int action, double value);
  double MaxValue(int state) const;
  // Highest-valued action; the lowest index wins ties.
  int Greedy(int state) const;

  // `state_id action_id q_value` lines for every non-zero entry.
  void Write(std::ostream& out) const;
  // Throws ParseError.
  static QTable Read(std::istream& in, int num_states, int num_actions);

  bool operator==(const QTable&) const = default;

 private:
  int num_states_;
  int num_actions_;
  std::vector<double> values_;
};

struct QLearningConfig {
  int episodes = 5000;
  double alpha = 0.1;
  double gamma = 0.95;
  double epsilon_start = 1.0;
  double epsilon_end = 0.05;
  // Fraction of episodes over which epsilon decays linearly.
  double epsilon_decay_fraction = 0.8;
  std::uint64_t seed = 0;
};

// Throws ConfigurationError unless alpha in (0, 1], gamma in [0, 1],
// epsilons in [0, 1], and episodes >= 1.
void ValidateQLearningConfig(const QLearningConfig& cfg);

double EpsilonAt(const QLearningConfig& cfg, int episode);

// Reset seed of training episode `episode`.
std::uint64_t EpisodeSeed(std::uint64_t seed, std::uint64_t episode);

struct EpisodeRecord {
  int episode = 0;
  double ret = 0.0;
  bool success = false;
};

struct TrainingResult {
  QTable q;
  std::vector<EpisodeRecord> curve;
};

// Epsilon-greedy tabular Q-learning:
// Q(s,a) += alpha * (r + gamma * max_a' Q(s',a') - Q(s,a)), with the
// bootstrap term dropped on terminal transitions. Deterministic in cfg.seed.
TrainingResult QLearningTrain(TabularTask& task, const QLearningConfig& cfg);

// Evaluation episodes draw from a seed stream disjoint from training.
inline constexpr std::uint64_t kEvaluationSeedOffset = 1000000;

struct EvaluationResult {
  double success_rate = 0.0;
  double mean_return = 0.0;
  std::vector<EpisodeRecord> episodes;
};

// Runs the greedy policy for `episodes` episodes with reset seeds
// EpisodeSeed(seed, i).
EvaluationResult EvaluateGreedy(TabularTask& task, const QTable& q,
                                int episodes, std::uint64_t seed);

// `episode,return,success` with a header row.
void WriteLearningCurve(std::ostream& out,
                        const std::vector<EpisodeRecord>& curve);

}  // namespace zebrat

#endif  // ZEBRAT_Q_LEARNING_H_
