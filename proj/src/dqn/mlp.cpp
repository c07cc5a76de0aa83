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

#include "dqn/mlp.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hapsnet::dqn {
namespace {

Eigen::MatrixXd uniform_matrix(int rows, int cols, double bound, Rng& rng) {
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) = uniform(rng, -bound, bound);
  }
  return m;
}

constexpr int kParamsPerHidden = 4;

}  // namespace

QNetwork::QNetwork(NetworkShape shape, Rng& init_rng) : shape_(std::move(shape)) {
  if (shape_.input <= 0 || shape_.output <= 0) {
    throw std::invalid_argument("QNetwork: input and output widths must be positive");
  }
  int fan_in = shape_.input;
  for (int width : shape_.hidden) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
    params_.push_back(uniform_matrix(width, fan_in, bound, init_rng));
    params_.push_back(uniform_matrix(width, 1, bound, init_rng));
    params_.push_back(Eigen::MatrixXd::Ones(width, 1));
    params_.push_back(Eigen::MatrixXd::Zero(width, 1));
    fan_in = width;
  }
  const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
  params_.push_back(uniform_matrix(shape_.output, fan_in, bound, init_rng));
  params_.push_back(uniform_matrix(shape_.output, 1, bound, init_rng));
}

Eigen::MatrixXd QNetwork::forward(const Eigen::MatrixXd& states, bool training,
                                  Rng* dropout_rng, ForwardCache* cache) const {
  if (states.rows() != shape_.input) {
    throw std::invalid_argument("QNetwork::forward: state width " +
                                std::to_string(states.rows()) + " != " +
                                std::to_string(shape_.input));
  }
  const bool use_dropout = training && shape_.dropout > 0.0;
  if (use_dropout && dropout_rng == nullptr) {
    throw std::invalid_argument("QNetwork::forward: dropout requires a random stream");
  }
  const double keep = 1.0 - shape_.dropout;
  if (cache) cache->hidden.clear();

  Eigen::MatrixXd x = states;
  for (std::size_t l = 0; l < shape_.hidden.size(); ++l) {
    const auto& w = params_[kParamsPerHidden * l];
    const auto& b = params_[kParamsPerHidden * l + 1];
    const auto& gain = params_[kParamsPerHidden * l + 2];
    const auto& beta = params_[kParamsPerHidden * l + 3];

    Eigen::MatrixXd z = w * x;
    z.colwise() += b.col(0);
    const Eigen::RowVectorXd mean = z.colwise().mean();
    z.rowwise() -= mean;
    const Eigen::RowVectorXd var = z.array().square().colwise().mean();
    const Eigen::RowVectorXd inv_std = (var.array() + kLayerNormEps).rsqrt();
    Eigen::MatrixXd xhat = z * inv_std.asDiagonal();
    Eigen::MatrixXd y = (xhat.array().colwise() * gain.col(0).array()).matrix();
    y.colwise() += beta.col(0);

    Eigen::MatrixXd h = y.cwiseMax(0.0);
    Eigen::MatrixXd mask;
    if (use_dropout) {
      mask.resize(h.rows(), h.cols());
      for (Eigen::Index j = 0; j < mask.cols(); ++j) {
        for (Eigen::Index i = 0; i < mask.rows(); ++i) {
          mask(i, j) = uniform01(*dropout_rng) < keep ? 1.0 / keep : 0.0;
        }
      }
      h.array() *= mask.array();
    }
    if (cache) {
      cache->hidden.push_back({std::move(x), std::move(xhat), inv_std, std::move(y),
                               std::move(mask)});
    }
    x = std::move(h);
  }
  const auto& w_out = params_[params_.size() - 2];
  const auto& b_out = params_[params_.size() - 1];
  Eigen::MatrixXd q = w_out * x;
  q.colwise() += b_out.col(0);
  if (cache) cache->last = std::move(x);
  return q;
}

Eigen::VectorXd QNetwork::predict(const Eigen::VectorXd& state) const {
  return forward(state, false, nullptr, nullptr).col(0);
}

ParamList QNetwork::backward(const ForwardCache& cache, const Eigen::MatrixXd& d_output) const {
  ParamList grads(params_.size());
  const std::size_t n_hidden = shape_.hidden.size();

  const auto& w_out = params_[params_.size() - 2];
  grads[params_.size() - 2] = d_output * cache.last.transpose();
  grads[params_.size() - 1] = d_output.rowwise().sum();
  Eigen::MatrixXd dh = w_out.transpose() * d_output;

  for (std::size_t l = n_hidden; l-- > 0;) {
    const auto& c = cache.hidden[l];
    const auto& w = params_[kParamsPerHidden * l];
    const auto& gain = params_[kParamsPerHidden * l + 2];

    if (c.mask.size() > 0) dh.array() *= c.mask.array();
    // ReLU.
    Eigen::MatrixXd dy = (c.pre_relu.array() > 0.0).select(dh, 0.0);

    grads[kParamsPerHidden * l + 2] = (dy.array() * c.xhat.array()).rowwise().sum().matrix();
    grads[kParamsPerHidden * l + 3] = dy.rowwise().sum();

    // Layer norm, per column: dz = inv_std * (dxhat - mean(dxhat) - xhat * mean(dxhat * xhat)).
    const Eigen::MatrixXd dxhat = (dy.array().colwise() * gain.col(0).array()).matrix();
    const Eigen::RowVectorXd mean_d = dxhat.colwise().mean();
    const Eigen::RowVectorXd mean_dx = (dxhat.array() * c.xhat.array()).colwise().mean();
    Eigen::MatrixXd dz = dxhat;
    dz.rowwise() -= mean_d;
    dz -= c.xhat * mean_dx.asDiagonal();
    dz = dz * c.inv_std.asDiagonal();

    grads[kParamsPerHidden * l] = dz * c.input.transpose();
    grads[kParamsPerHidden * l + 1] = dz.rowwise().sum();
    if (l > 0) dh = w.transpose() * dz;
  }
  return grads;
}

void QNetwork::copy_parameters_from(const QNetwork& other) {
  if (!(other.shape_ == shape_)) {
    throw std::invalid_argument("QNetwork::copy_parameters_from: shape mismatch");
  }
  params_ = other.params_;
}

std::size_t QNetwork::parameter_count() const {
  std::size_t n = 0;
  for (const auto& p : params_) n += static_cast<std::size_t>(p.size());
  return n;
}

ParamList zeros_like(const ParamList& params) {
  ParamList out;
  out.reserve(params.size());
  for (const auto& p : params) out.push_back(Eigen::MatrixXd::Zero(p.rows(), p.cols()));
  return out;
}

void RmsProp::step(ParamList& params, const ParamList& grads) {
  for (std::size_t i = 0; i < params.size(); ++i) {
    auto ms = mean_square_[i].array();
    const auto g = grads[i].array();
    ms = decay_ * ms + (1.0 - decay_) * g.square();
    params[i].array() -= learning_rate_ * g / (ms + eps_).sqrt();
  }
}

namespace {

constexpr const char* kMagic = "hapsnet-qnetwork";
constexpr int kVersion = 1;

void write_list(std::ostream& out, const ParamList& list) {
  for (const auto& m : list) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      for (Eigen::Index i = 0; i < m.rows(); ++i) out << m(i, j) << '\n';
    }
  }
}

void read_list(std::istream& in, ParamList& list) {
  for (auto& m : list) {
    Eigen::Index rows = 0, cols = 0;
    if (!(in >> rows >> cols) || rows != m.rows() || cols != m.cols()) {
      throw std::runtime_error("checkpoint: tensor shape mismatch");
    }
    for (Eigen::Index j = 0; j < cols; ++j) {
      for (Eigen::Index i = 0; i < rows; ++i) {
        if (!(in >> m(i, j))) throw std::runtime_error("checkpoint: truncated tensor");
      }
    }
  }
}

}  // namespace

void save_checkpoint(std::ostream& out, const QNetwork& net, const RmsProp& opt) {
  const auto old_precision = out.precision(17);
  const auto& s = net.shape();
  out << kMagic << ' ' << kVersion << '\n';
  out << s.input << ' ' << s.output << ' ' << s.dropout << ' ' << s.hidden.size();
  for (int w : s.hidden) out << ' ' << w;
  out << '\n';
  out << opt.learning_rate() << ' ' << opt.decay() << ' ' << opt.eps() << '\n';
  write_list(out, net.params());
  write_list(out, opt.mean_square());
  out.precision(old_precision);
}

void load_checkpoint(std::istream& in, QNetwork& net, RmsProp& opt) {
  std::string magic;
  int version = 0;
  if (!(in >> magic >> version) || magic != kMagic) {
    throw std::runtime_error("checkpoint: bad header");
  }
  if (version != kVersion) {
    throw std::runtime_error("checkpoint: unsupported version " + std::to_string(version));
  }
  NetworkShape shape;
  std::size_t n_hidden = 0;
  if (!(in >> shape.input >> shape.output >> shape.dropout >> n_hidden)) {
    throw std::runtime_error("checkpoint: bad shape line");
  }
  shape.hidden.resize(n_hidden);
  for (auto& w : shape.hidden) {
    if (!(in >> w)) throw std::runtime_error("checkpoint: bad shape line");
  }
  double lr = 0.0, decay = 0.0, eps = 0.0;
  if (!(in >> lr >> decay >> eps)) throw std::runtime_error("checkpoint: bad optimizer line");

  Rng unused(0);
  QNetwork loaded(shape, unused);
  RmsProp loaded_opt(loaded.params(), lr, decay, eps);
  read_list(in, loaded.params());
  read_list(in, loaded_opt.mean_square());
  net = std::move(loaded);
  opt = std::move(loaded_opt);
}

}  // namespace hapsnet::dqn
