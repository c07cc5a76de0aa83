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

#include "dqn/dqn_agent.hpp"

#include <algorithm>
#include <cmath>

namespace hapsnet::dqn {

double EpsilonSchedule::epsilon(long long at_tau) const {
  return eps_end + (eps_start - eps_end) * std::exp(-static_cast<double>(at_tau) / eps_decay);
}

double huber_loss(double y, double y_hat, double delta) {
  const double a = std::abs(y - y_hat);
  return a <= delta ? 0.5 * a * a : delta * a - 0.5 * delta * delta;
}

double huber_gradient(double y, double y_hat, double delta) {
  return std::clamp(y - y_hat, -delta, delta);
}

double compute_target(double reward, const Eigen::VectorXd& next_state, const QNetwork& target,
                      double gamma, bool terminal) {
  if (terminal || gamma == 0.0) return reward;
  return reward + gamma * target.predict(next_state).maxCoeff();
}

int argmax(const Eigen::VectorXd& values) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return static_cast<int>(best);
}

int select_action(const QNetwork& policy, const Eigen::VectorXd& state,
                  EpsilonSchedule& schedule, Rng& rng, bool count_greedy_only) {
  const double eps = schedule.value();
  int action;
  if (uniform01(rng) < eps) {
    action = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(policy.n_actions())));
    if (!count_greedy_only) ++schedule.tau;
  } else {
    action = argmax(policy.predict(state));
    ++schedule.tau;
  }
  return action;
}

std::optional<double> train_batch(QNetwork& policy, const QNetwork& target,
                                  const ReplayMemory& memory, RmsProp& optimizer,
                                  const TrainSettings& settings, Rng& replay_rng,
                                  Rng& dropout_rng) {
  if (memory.size() < static_cast<std::size_t>(settings.min_fill) ||
      memory.size() < static_cast<std::size_t>(settings.batch_size)) {
    return std::nullopt;
  }
  const auto idx = memory.sample_indices(static_cast<std::size_t>(settings.batch_size), replay_rng);
  const int batch = static_cast<int>(idx.size());
  const int n_in = policy.shape().input;

  Eigen::MatrixXd states(n_in, batch);
  Eigen::MatrixXd next_states(n_in, batch);
  for (int j = 0; j < batch; ++j) {
    states.col(j) = memory[idx[j]].state;
    next_states.col(j) = memory[idx[j]].next_state;
  }

  // Bootstrapped targets from the target network in evaluation mode.
  const Eigen::MatrixXd next_q = target.forward(next_states, false, nullptr, nullptr);
  ForwardCache cache;
  const Eigen::MatrixXd q = policy.forward(states, true, &dropout_rng, &cache);

  Eigen::MatrixXd d_out = Eigen::MatrixXd::Zero(q.rows(), q.cols());
  double loss = 0.0;
  for (int j = 0; j < batch; ++j) {
    const auto& t = memory[idx[j]];
    const double y_hat =
        t.terminal ? t.reward : t.reward + settings.gamma * next_q.col(j).maxCoeff();
    const double y = q(t.action, j);
    loss += huber_loss(y, y_hat, settings.huber_delta);
    d_out(t.action, j) = huber_gradient(y, y_hat, settings.huber_delta) / batch;
  }
  loss /= batch;

  const ParamList grads = policy.backward(cache, d_out);
  optimizer.step(policy.params(), grads);
  return loss;
}

bool sync_target(const QNetwork& policy, QNetwork& target, long long step, int n_t) {
  if (n_t < 1 || step % n_t != 0) return false;
  target.copy_parameters_from(policy);
  return true;
}

DqnSettings DqnSettings::from_config(const SimConfig& c, int n_inputs, int n_actions) {
  DqnSettings s;
  s.shape = NetworkShape{n_inputs, c.hidden_layers, n_actions, c.dropout};
  s.train.batch_size = c.batch_size;
  s.train.min_fill = c.replay_min;
  s.train.gamma = c.gamma;
  s.train.huber_delta = c.huber_delta;
  s.replay_capacity = c.replay_capacity;
  s.target_update = c.target_update;
  s.learning_rate = c.learning_rate;
  s.rmsprop_decay = c.rmsprop_decay;
  s.rmsprop_eps = c.rmsprop_eps;
  s.epsilon = EpsilonSchedule{c.eps_start, c.eps_end, c.eps_decay, 0};
  s.tau_mode = c.tau_mode;
  return s;
}

DqnAgent::DqnAgent(const DqnSettings& settings, Rng init_rng, Rng explore_rng, Rng replay_rng,
                   Rng dropout_rng)
    : settings_(settings),
      explore_rng_(std::move(explore_rng)),
      replay_rng_(std::move(replay_rng)),
      dropout_rng_(std::move(dropout_rng)),
      policy_(settings.shape, init_rng),
      target_(policy_),
      optimizer_(policy_.params(), settings.learning_rate, settings.rmsprop_decay,
                 settings.rmsprop_eps),
      memory_(static_cast<std::size_t>(settings.replay_capacity)) {}

int DqnAgent::act(const Eigen::VectorXd& state) {
  return select_action(policy_, state, settings_.epsilon, explore_rng_,
                       settings_.tau_mode == TauMode::kGreedy);
}

std::optional<double> DqnAgent::observe(Transition t) {
  memory_.push(std::move(t));
  ++steps_;
  auto loss = train_batch(policy_, target_, memory_, optimizer_, settings_.train, replay_rng_,
                          dropout_rng_);
  sync_target(policy_, target_, steps_, settings_.target_update);
  return loss;
}

}  // namespace hapsnet::dqn
