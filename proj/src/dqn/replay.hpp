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

#ifndef HAPSNET_DQN_REPLAY_HPP_
#define HAPSNET_DQN_REPLAY_HPP_

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "rng.hpp"

namespace hapsnet::dqn {

struct Transition {
  Eigen::VectorXd state;
  int action = 0;
  double reward = 0.0;
  Eigen::VectorXd next_state;
  bool terminal = false;
};

// Fixed-capacity ring buffer; once full, each push overwrites the oldest
// transition.
class ReplayMemory {
 public:
  explicit ReplayMemory(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0) throw std::invalid_argument("ReplayMemory: zero capacity");
    items_.reserve(capacity);
  }

  void push(Transition t) {
    if (items_.size() < capacity_) {
      items_.push_back(std::move(t));
    } else {
      items_[next_] = std::move(t);
    }
    next_ = (next_ + 1) % capacity_;
    ++total_pushed_;
  }

  std::size_t size() const { return items_.size(); }
  std::size_t capacity() const { return capacity_; }
  std::size_t total_pushed() const { return total_pushed_; }
  const Transition& operator[](std::size_t i) const { return items_[i]; }

  // Indices of `batch` distinct transitions, uniformly at random (partial
  // Fisher-Yates).
  std::vector<std::size_t> sample_indices(std::size_t batch, Rng& rng) const {
    if (batch > items_.size()) throw std::invalid_argument("ReplayMemory: batch exceeds fill");
    std::vector<std::size_t> idx(items_.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (std::size_t i = 0; i < batch; ++i) {
      const std::size_t j = i + uniform_index(rng, idx.size() - i);
      std::swap(idx[i], idx[j]);
    }
    idx.resize(batch);
    return idx;
  }

 private:
  std::size_t capacity_;
  std::size_t next_ = 0;
  std::size_t total_pushed_ = 0;
  std::vector<Transition> items_;
};

}  // namespace hapsnet::dqn

#endif  // HAPSNET_DQN_REPLAY_HPP_
