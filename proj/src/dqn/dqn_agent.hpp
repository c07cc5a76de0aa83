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

#ifndef HAPSNET_DQN_DQN_AGENT_HPP_
#define HAPSNET_DQN_DQN_AGENT_HPP_

#include <optional>

#include "config.hpp"
#include "dqn/mlp.hpp"
#include "dqn/replay.hpp"
#include "rng.hpp"

namespace hapsnet::dqn {

// eps(tau) = eps_end + (eps_start - eps_end) * exp(-tau / eps_decay), where tau
// counts the action selections made through the network.
struct EpsilonSchedule {
  double eps_start = 0.9;
  double eps_end = 0.5;
  double eps_decay = 200.0;
  long long tau = 0;

  double value() const { return epsilon(tau); }
  double epsilon(long long at_tau) const;
};

double huber_loss(double y, double y_hat, double delta);
// d/dy of huber_loss.
double huber_gradient(double y, double y_hat, double delta);

// r + gamma * max_a Q_target(s', a), or r alone for terminal transitions.
double compute_target(double reward, const Eigen::VectorXd& next_state,
                      const QNetwork& target, double gamma, bool terminal = false);

// Lowest index among the maximal entries.
int argmax(const Eigen::VectorXd& values);

// With probability eps(tau) a uniform random action; otherwise the greedy
// action of `policy`, in which case tau advances when `count_greedy_only`.
int select_action(const QNetwork& policy, const Eigen::VectorXd& state,
                  EpsilonSchedule& schedule, Rng& rng, bool count_greedy_only = true);

struct TrainSettings {
  int batch_size = 128;
  int min_fill = 264;
  double gamma = 0.999;
  double huber_delta = 1.0;
};

// One minibatch step: mean Huber loss of Q(s, a) against target-network
// bootstrapped values, exact backprop, RMSprop update. Returns the batch loss,
// or nullopt (no update) while the memory holds fewer than min_fill entries.
std::optional<double> train_batch(QNetwork& policy, const QNetwork& target,
                                  const ReplayMemory& memory, RmsProp& optimizer,
                                  const TrainSettings& settings, Rng& replay_rng,
                                  Rng& dropout_rng);

// Copies policy into target when step is a multiple of n_t. Returns whether
// a copy happened.
bool sync_target(const QNetwork& policy, QNetwork& target, long long step, int n_t);

struct DqnSettings {
  NetworkShape shape;
  TrainSettings train;
  int replay_capacity = 5000;
  int target_update = 10;
  double learning_rate = 1e-4;
  double rmsprop_decay = 0.99;
  double rmsprop_eps = 1e-8;
  EpsilonSchedule epsilon;
  TauMode tau_mode = TauMode::kGreedy;

  static DqnSettings from_config(const SimConfig& c, int n_inputs, int n_actions);
};

// Policy/target network pair with its own replay memory, optimizer and
// random streams.
class DqnAgent {
 public:
  DqnAgent(const DqnSettings& settings, Rng init_rng, Rng explore_rng, Rng replay_rng,
           Rng dropout_rng);

  int act(const Eigen::VectorXd& state);

  // Stores the transition, runs one training step once the memory is warm,
  // and syncs the target every target_update steps. Returns the batch loss
  // when a training step ran.
  std::optional<double> observe(Transition t);

  const QNetwork& policy() const { return policy_; }
  QNetwork& policy() { return policy_; }
  const QNetwork& target() const { return target_; }
  const ReplayMemory& memory() const { return memory_; }
  const EpsilonSchedule& schedule() const { return settings_.epsilon; }
  long long steps() const { return steps_; }
  RmsProp& optimizer() { return optimizer_; }

 private:
  DqnSettings settings_;
  Rng explore_rng_;
  Rng replay_rng_;
  Rng dropout_rng_;
  QNetwork policy_;
  QNetwork target_;
  RmsProp optimizer_;
  ReplayMemory memory_;
  long long steps_ = 0;
};

}  // namespace hapsnet::dqn

#endif  // HAPSNET_DQN_DQN_AGENT_HPP_
