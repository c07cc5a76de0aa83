// Copyright 2026 The hapsnet Authors.
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

#ifndef HAPSNET_ENVIRONMENT_HPP_
#define HAPSNET_ENVIRONMENT_HPP_

#include <memory>
#include <vector>

#include "agents.hpp"
#include "channel.hpp"
#include "config.hpp"
#include "load.hpp"
#include "metrics.hpp"
#include "radio.hpp"
#include "rng.hpp"
#include "scenario.hpp"

namespace hapsnet {

struct SlotMetrics {
  int episode = 0;
  int slot = 0;
  double fairness = 1.0;
  double mean_load = 0.0;       // over all ABSs
  int outage_total = 0;
  double outage_per_abs = 0.0;
  double mean_user_rate = 0.0;  // bits/s over all users, dropped users at 0
  double mean_uav_reward = 0.0;
  double objective = 0.0;       // this slot's term of the global objective
  int haps_users = 0;           // users served by a HAPS
  int dropped = 0;
  bool load_converged = true;
  std::vector<double> loads;
  std::vector<double> uav_rewards;
};

using EpisodeLog = std::vector<SlotMetrics>;

// One simulation cell: a scheme, a config and a master seed. Agents persist
// across episodes; users, UAV placement, channels and fairness restart with
// each episode.
class Environment {
 public:
  Environment(SimConfig config, Scheme scheme, std::uint64_t seed);

  const SimConfig& config() const { return config_; }
  Scheme scheme() const { return scheme_; }
  const ScenarioState& scenario() const { return scenario_; }
  const FairnessTracker& fairness() const { return fairness_; }
  const UavAgent& agent(int uav) const { return *agents_[uav]; }
  int episode() const { return episode_; }

  void begin_episode();

  // One slot, in order: user mobility, association, UAV actions, link
  // budgets, load fixed point, capacity enforcement, fairness broadcast,
  // rewards and learning.
  SlotMetrics step();

  // begin_episode() followed by n_slots steps.
  EpisodeLog run_episode(int n_slots);

 private:
  SimConfig config_;
  Scheme scheme_;
  RngStreams streams_;
  Rng spawn_rng_;
  Rng mobility_rng_;
  Rng shadow_rng_;
  Rng los_rng_;
  Rng channel_rng_;
  PropagationParams prop_;
  ChannelPlan plan_;
  RewardWeights weights_;
  std::vector<std::unique_ptr<UavAgent>> agents_;
  ScenarioState scenario_;
  FairnessTracker fairness_{0};
  std::vector<int> association_;
  std::vector<double> demand_;
  int episode_ = -1;
  int slot_ = 0;
};

}  // namespace hapsnet

#endif  // HAPSNET_ENVIRONMENT_HPP_
