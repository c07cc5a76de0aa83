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

#include "metrics.hpp"

#include <stdexcept>

namespace hapsnet {

double jain_index(std::span<const double> values) {
  if (values.empty()) throw std::domain_error("jain_index: empty user set");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double v : values) {
    sum += v;
    sum_sq += v * v;
  }
  if (sum_sq == 0.0) return 1.0;
  return sum * sum / (static_cast<double>(values.size()) * sum_sq);
}

void FairnessTracker::accumulate(std::span<const double> rates, double duration) {
  for (std::size_t k = 0; k < cumulative_.size(); ++k) cumulative_[k] += rates[k] * duration;
  index_ = jain_index(cumulative_);
}

double uav_reward(double fairness, double load, const RewardWeights& w) {
  return w.phi * fairness + w.psi * (1.0 - load);
}

double slot_objective(const SlotRecord& slot, const RewardWeights& w) {
  double total = 0.0;
  for (std::size_t b = 0; b < slot.loads.size(); ++b) {
    total += slot.served_users[b] * (w.phi * slot.fairness + w.psi * (1.0 - slot.loads[b]));
  }
  return total;
}

double objective_value(std::span<const SlotRecord> history, const RewardWeights& w) {
  double total = 0.0;
  for (const auto& slot : history) total += slot_objective(slot, w);
  return total;
}

OutageCount outage_count(std::span<const int> attributed_abs, std::span<const bool> dropped,
                         std::span<const double> rates, std::span<const double> demand,
                         int n_abs) {
  OutageCount out;
  out.per_abs.assign(n_abs, 0);
  for (std::size_t k = 0; k < attributed_abs.size(); ++k) {
    if (!dropped[k] && rates[k] >= demand[k]) continue;
    ++out.total;
    if (attributed_abs[k] >= 0) ++out.per_abs[attributed_abs[k]];
  }
  return out;
}

}  // namespace hapsnet
