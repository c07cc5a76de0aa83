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

#ifndef HAPSNET_METRICS_HPP_
#define HAPSNET_METRICS_HPP_

#include <span>
#include <vector>

namespace hapsnet {

// Jain's index (sum x)^2 / (n * sum x^2). An all-zero vector is treated as
// perfectly fair (1). Throws std::domain_error on an empty set.
double jain_index(std::span<const double> values);

// Per-user delivered volume since the start of the episode and the
// resulting fairness index.
class FairnessTracker {
 public:
  explicit FairnessTracker(int n_users) : cumulative_(n_users, 0.0) {}

  // Adds rate * duration for every user and refreshes the index.
  void accumulate(std::span<const double> rates, double duration);
  double index() const { return index_; }
  std::span<const double> cumulative() const { return cumulative_; }

 private:
  std::vector<double> cumulative_;
  double index_ = 1.0;
};

struct RewardWeights {
  double phi = 0.5;
  double psi = 0.5;
};

// phi * F + psi * (1 - load).
double uav_reward(double fairness, double load, const RewardWeights& w);

// Per-slot quantities the global objective sums over.
struct SlotRecord {
  double fairness = 1.0;
  std::vector<double> loads;      // per ABS
  std::vector<int> served_users;  // per ABS, |K_b(t)|
};

// Sum over slots, ABSs and served users of phi * F(t) + psi * (1 - rho_b(t)).
double objective_value(std::span<const SlotRecord> history, const RewardWeights& w);
double slot_objective(const SlotRecord& slot, const RewardWeights& w);

struct OutageCount {
  std::vector<int> per_abs;
  int total = 0;
};

// A user is in outage when it was dropped or its rate falls short of its
// demand. Dropped users are charged to `attributed_abs` (the ABS they were
// associated with before dropping); each user counts at most once.
OutageCount outage_count(std::span<const int> attributed_abs, std::span<const bool> dropped,
                         std::span<const double> rates, std::span<const double> demand,
                         int n_abs);

}  // namespace hapsnet

#endif  // HAPSNET_METRICS_HPP_
