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

#include "agents.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace hapsnet {

Eigen::VectorXd StateEncoding::vector() const {
  Eigen::VectorXd v(3 + static_cast<Eigen::Index>(channel_one_hot.size()));
  v[0] = x;
  v[1] = y;
  v[2] = h;
  for (std::size_t q = 0; q < channel_one_hot.size(); ++q) v[3 + q] = channel_one_hot[q];
  return v;
}

StateEncoding encode_state(const AbsState& uav, const SimConfig& config) {
  if (!inside_feasible_box(uav.position, config)) {
    throw ContractViolation("encode_state: UAV " + std::to_string(uav.id) +
                            " outside the feasible box");
  }
  if (uav.channel < 0 || uav.channel >= config.n_uav_channels) {
    throw ContractViolation("encode_state: invalid channel");
  }
  StateEncoding s;
  s.x = (uav.position.x - config.x_min) / config.area_width();
  s.y = (uav.position.y - config.y_min) / config.area_depth();
  s.h = (uav.position.z - config.h_min) / (config.h_max - config.h_min);
  s.channel_one_hot.assign(config.n_uav_channels, 0.0);
  s.channel_one_hot[uav.channel] = 1.0;
  return s;
}

ActionSpace::ActionSpace(std::vector<Direction> directions, int n_channels)
    : directions_(std::move(directions)), n_channels_(n_channels) {
  if (directions_.empty() || n_channels_ < 1) {
    throw ContractViolation("ActionSpace: empty movement or channel set");
  }
}

ActionSpace ActionSpace::full(int n_channels) {
  return ActionSpace({kAllDirections.begin(), kAllDirections.end()}, n_channels);
}

ActionSpace ActionSpace::planar(int n_channels) {
  return ActionSpace({Direction::kLeft, Direction::kRight, Direction::kForward,
                      Direction::kBackward, Direction::kFixed},
                     n_channels);
}

UavAction ActionSpace::decode(int index) const {
  if (index < 0 || index >= size()) {
    throw ContractViolation("ActionSpace::decode: index " + std::to_string(index) +
                            " out of range");
  }
  return {directions_[index / n_channels_], index % n_channels_};
}

int ActionSpace::encode(const UavAction& action) const {
  const auto it = std::find(directions_.begin(), directions_.end(), action.direction);
  if (it == directions_.end() || action.channel < 0 || action.channel >= n_channels_) {
    throw ContractViolation("ActionSpace::encode: action not in this space");
  }
  return static_cast<int>(it - directions_.begin()) * n_channels_ + action.channel;
}

double QTable::max_value(int s) const {
  double best = (*this)(s, 0);
  for (int a = 1; a < n_actions_; ++a) best = std::max(best, (*this)(s, a));
  return best;
}

int QTable::greedy_action(int s) const {
  int best = 0;
  for (int a = 1; a < n_actions_; ++a) {
    if ((*this)(s, a) > (*this)(s, best)) best = a;
  }
  return best;
}

void qlearning_update(QTable& table, int s, int a, double reward, int s_next, double alpha,
                      double gamma) {
  double& q = table(s, a);
  q += alpha * (reward + gamma * table.max_value(s_next) - q);
}

int qtable_state(const AbsState& uav, const SimConfig& config) {
  const int g = config.ql_grid;
  auto cell = [g](double v, double lo, double hi) {
    const int c = static_cast<int>(std::floor((v - lo) / (hi - lo) * g));
    return std::clamp(c, 0, g - 1);
  };
  const int cx = cell(uav.position.x, config.x_min, config.x_max);
  const int cy = cell(uav.position.y, config.y_min, config.y_max);
  return (cy * g + cx) * config.n_uav_channels + uav.channel;
}

int qtable_state_count(const SimConfig& config) {
  return config.ql_grid * config.ql_grid * config.n_uav_channels;
}

std::vector<int> init_channels(int n_uavs, int n_channels, Rng& rng) {
  std::vector<int> out(n_uavs);
  for (auto& q : out) q = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(n_channels)));
  return out;
}

DqnUavAgent::DqnUavAgent(const SimConfig& config, const RngStreams& streams, int uav_index)
    : config_(config),
      actions_(ActionSpace::full(config.n_uav_channels)),
      engine_(dqn::DqnSettings::from_config(config, 3 + config.n_uav_channels, actions_.size()),
              streams.stream("dqn-init", uav_index), streams.stream("dqn-explore", uav_index),
              streams.stream("dqn-replay", uav_index), streams.stream("dqn-dropout", uav_index)) {}

int DqnUavAgent::select(const AbsState& uav) {
  return engine_.act(encode_state(uav, config_).vector());
}

void DqnUavAgent::learn(const AbsState& before, int action, double reward, const AbsState& after) {
  engine_.observe(dqn::Transition{encode_state(before, config_).vector(), action, reward,
                                  encode_state(after, config_).vector(), false});
}

QLearningUavAgent::QLearningUavAgent(const SimConfig& config, const RngStreams& streams,
                                     int uav_index)
    : config_(config),
      actions_(ActionSpace::planar(config.n_uav_channels)),
      table_(qtable_state_count(config), actions_.size()),
      schedule_{config.eps_start, config.eps_end, config.eps_decay, 0},
      explore_rng_(streams.stream("ql-explore", uav_index)) {}

int QLearningUavAgent::select(const AbsState& uav) {
  const double eps = schedule_.value();
  if (uniform01(explore_rng_) < eps) {
    if (config_.tau_mode == TauMode::kEveryStep) ++schedule_.tau;
    return static_cast<int>(uniform_index(explore_rng_, static_cast<std::uint64_t>(actions_.size())));
  }
  ++schedule_.tau;
  return table_.greedy_action(qtable_state(uav, config_));
}

void QLearningUavAgent::learn(const AbsState& before, int action, double reward,
                              const AbsState& after) {
  qlearning_update(table_, qtable_state(before, config_), action, reward,
                   qtable_state(after, config_), config_.ql_alpha, config_.gamma);
}

std::unique_ptr<UavAgent> make_agent(Scheme scheme, const SimConfig& config,
                                     const RngStreams& streams, int uav_index) {
  if (scheme_uses_dqn(scheme)) return std::make_unique<DqnUavAgent>(config, streams, uav_index);
  return std::make_unique<QLearningUavAgent>(config, streams, uav_index);
}

}  // namespace hapsnet
