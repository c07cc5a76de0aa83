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

#ifndef HAPSNET_DQN_MLP_HPP_
#define HAPSNET_DQN_MLP_HPP_

#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "rng.hpp"

namespace hapsnet::dqn {

using ParamList = std::vector<Eigen::MatrixXd>;

struct NetworkShape {
  int input = 0;
  std::vector<int> hidden;
  int output = 0;
  double dropout = 0.0;

  friend bool operator==(const NetworkShape&, const NetworkShape&) = default;
};

// Intermediate values of a batch forward pass, kept for backprop.
struct ForwardCache {
  struct Hidden {
    Eigen::MatrixXd input;    // layer input, features x batch
    Eigen::MatrixXd xhat;     // normalized pre-activation
    Eigen::RowVectorXd inv_std;
    Eigen::MatrixXd pre_relu; // gain * xhat + bias
    Eigen::MatrixXd mask;     // dropout mask with inverted scaling, empty if unused
  };
  std::vector<Hidden> hidden;
  Eigen::MatrixXd last;  // input of the output layer
};

// Multilayer perceptron Q(s, .): every hidden layer is
// affine -> layer norm (learned gain/bias) -> ReLU -> dropout, followed by a
// linear output layer with one unit per action.
//
// Parameters are held as a flat list: for each hidden layer
// [weight, bias, ln_gain, ln_bias], then [weight, bias] of the output layer.
// Biases and norm parameters are column vectors stored as n x 1 matrices.
class QNetwork {
 public:
  static constexpr double kLayerNormEps = 1e-5;

  QNetwork() = default;
  // Uniform(-1/sqrt(fan_in), 1/sqrt(fan_in)) weights and biases, unit gains.
  QNetwork(NetworkShape shape, Rng& init_rng);

  const NetworkShape& shape() const { return shape_; }
  int n_actions() const { return shape_.output; }

  ParamList& params() { return params_; }
  const ParamList& params() const { return params_; }

  // Columns of `states` are samples. Dropout is applied only when `training`
  // is set and the dropout rate is positive; then `dropout_rng` must be
  // non-null. `cache` may be null when no backward pass follows.
  Eigen::MatrixXd forward(const Eigen::MatrixXd& states, bool training, Rng* dropout_rng,
                          ForwardCache* cache) const;

  // Deterministic single-state evaluation.
  Eigen::VectorXd predict(const Eigen::VectorXd& state) const;

  // Gradient of a scalar loss given dL/dQ (actions x batch) for the pass
  // recorded in `cache`. Same layout as params().
  ParamList backward(const ForwardCache& cache, const Eigen::MatrixXd& d_output) const;

  void copy_parameters_from(const QNetwork& other);

  std::size_t parameter_count() const;

 private:
  NetworkShape shape_;
  ParamList params_;
};

ParamList zeros_like(const ParamList& params);

// E[g^2] <- decay * E[g^2] + (1 - decay) g^2;
// theta <- theta - lr * g / sqrt(E[g^2] + eps).
class RmsProp {
 public:
  RmsProp() = default;
  RmsProp(const ParamList& like, double learning_rate, double decay, double eps)
      : learning_rate_(learning_rate), decay_(decay), eps_(eps), mean_square_(zeros_like(like)) {}

  void step(ParamList& params, const ParamList& grads);

  const ParamList& mean_square() const { return mean_square_; }
  ParamList& mean_square() { return mean_square_; }
  double learning_rate() const { return learning_rate_; }
  double decay() const { return decay_; }
  double eps() const { return eps_; }

 private:
  double learning_rate_ = 1e-4;
  double decay_ = 0.99;
  double eps_ = 1e-8;
  ParamList mean_square_;
};

// Versioned text checkpoint of a network and its optimizer state. Values are
// written with 17 significant digits, so a save/load round trip is exact.
void save_checkpoint(std::ostream& out, const QNetwork& net, const RmsProp& opt);
// Throws std::runtime_error on a malformed or incompatible stream.
void load_checkpoint(std::istream& in, QNetwork& net, RmsProp& opt);

}  // namespace hapsnet::dqn

#endif  // HAPSNET_DQN_MLP_HPP_
