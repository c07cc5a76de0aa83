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

#ifndef HAPSNET_AGENTS_HPP_
#define HAPSNET_AGENTS_HPP_

#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "config.hpp"
#include "dqn/dqn_agent.hpp"
#include "placement.hpp"
#include "rng.hpp"
#include "scenario.hpp"

namespace hapsnet {

// Normalized UAV position in the feasible box plus a one-hot channel.
struct StateEncoding {
  double x = 0.0;
  double y = 0.0;
  double h = 0.0;
  std::vector<double> channel_one_hot;

  Eigen::VectorXd vector() const;
};

// Throws ContractViolation for a UAV outside the feasible box or on an
// invalid channel.
StateEncoding encode_state(const AbsState& uav, const SimConfig& config);

struct UavAction {
  Direction direction = Direction::kFixed;
  int channel = 0;
  friend bool operator==(const UavAction&, const UavAction&) = default;
};

// Cross product of a movement set and the UAV channels; index =
// direction_position * n_channels + channel.
class ActionSpace {
 public:
  ActionSpace(std::vector<Direction> directions, int n_channels);

  // All seven movement directions.
  static ActionSpace full(int n_channels);
  // Horizontal moves only (fixed-altitude benchmarks).
  static ActionSpace planar(int n_channels);

  int size() const { return static_cast<int>(directions_.size()) * n_channels_; }
  int n_channels() const { return n_channels_; }
  std::span<const Direction> directions() const { return directions_; }

  // Throws ContractViolation on out-of-range input.
  UavAction decode(int index) const;
  int encode(const UavAction& action) const;

 private:
  std::vector<Direction> directions_;
  int n_channels_;
};

// Dense action-value table over a (horizontal cell, channel) state grid.
class QTable {
 public:
  QTable(int n_states, int n_actions)
      : n_states_(n_states), n_actions_(n_actions),
        values_(static_cast<std::size_t>(n_states) * n_actions, 0.0) {}

  int n_states() const { return n_states_; }
  int n_actions() const { return n_actions_; }
  double& operator()(int s, int a) { return values_[static_cast<std::size_t>(s) * n_actions_ + a]; }
  double operator()(int s, int a) const {
    return values_[static_cast<std::size_t>(s) * n_actions_ + a];
  }
  double max_value(int s) const;
  int greedy_action(int s) const;  // lowest index on ties

 private:
  int n_states_;
  int n_actions_;
  std::vector<double> values_;
};

// Q(s,a) += alpha * (r + gamma * max_a' Q(s',a') - Q(s,a)).
void qlearning_update(QTable& table, int s, int a, double reward, int s_next, double alpha,
                      double gamma);

// Grid cell of the UAV's horizontal position combined with its channel.
int qtable_state(const AbsState& uav, const SimConfig& config);
int qtable_state_count(const SimConfig& config);

// I.i.d. uniform channel per UAV.
std::vector<int> init_channels(int n_uavs, int n_channels, Rng& rng);

// Decision-maker bound to one UAV.
class UavAgent {
 public:
  virtual ~UavAgent() = default;
  virtual const ActionSpace& actions() const = 0;
  virtual int select(const AbsState& uav) = 0;
  virtual void learn(const AbsState& before, int action, double reward,
                     const AbsState& after) = 0;
  // Altitude at which the agent starts each episode.
  virtual double start_altitude(const SimConfig& config) const = 0;
};

class DqnUavAgent final : public UavAgent {
 public:
  DqnUavAgent(const SimConfig& config, const RngStreams& streams, int uav_index);

  const ActionSpace& actions() const override { return actions_; }
  int select(const AbsState& uav) override;
  void learn(const AbsState& before, int action, double reward, const AbsState& after) override;
  double start_altitude(const SimConfig& config) const override { return config.h_min; }

  const dqn::DqnAgent& engine() const { return engine_; }

 private:
  SimConfig config_;
  ActionSpace actions_;
  dqn::DqnAgent engine_;
};

// Tabular benchmark flying at h_max with horizontal moves only.
class QLearningUavAgent final : public UavAgent {
 public:
  QLearningUavAgent(const SimConfig& config, const RngStreams& streams, int uav_index);

  const ActionSpace& actions() const override { return actions_; }
  int select(const AbsState& uav) override;
  void learn(const AbsState& before, int action, double reward, const AbsState& after) override;
  double start_altitude(const SimConfig& config) const override { return config.h_max; }

  const QTable& table() const { return table_; }

 private:
  SimConfig config_;
  ActionSpace actions_;
  QTable table_;
  dqn::EpsilonSchedule schedule_;
  Rng explore_rng_;
};

std::unique_ptr<UavAgent> make_agent(Scheme scheme, const SimConfig& config,
                                     const RngStreams& streams, int uav_index);

}  // namespace hapsnet

#endif  // HAPSNET_AGENTS_HPP_
