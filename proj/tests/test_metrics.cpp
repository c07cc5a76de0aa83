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

#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "metrics.hpp"
#include "rng.hpp"

using namespace hapsnet;
using doctest::Approx;

TEST_CASE("jain index closed forms") {
  CHECK(jain_index(std::vector<double>{3, 3, 3, 3}) == Approx(1.0).epsilon(1e-15));
  std::vector<double> one_hot(200, 0.0);
  one_hot[17] = 1.0;
  CHECK(jain_index(one_hot) == Approx(1.0 / 200).epsilon(1e-15));
  CHECK(jain_index(std::vector<double>{1, 2, 3}) == Approx(36.0 / 42.0).epsilon(1e-15));
  CHECK(jain_index(std::vector<double>{0, 0, 0}) == 1.0);
  CHECK_THROWS_AS(jain_index(std::vector<double>{}), std::domain_error);
}

TEST_CASE("jain index bounds and scale invariance") {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(uniform_index(rng, 50));
    std::vector<double> x(n), y(n);
    const double c = uniform(rng, 0.01, 1e6);
    for (int k = 0; k < n; ++k) {
      x[k] = uniform01(rng) < 0.2 ? 0.0 : uniform(rng, 0.0, 1e7);
      y[k] = c * x[k];
    }
    const double f = jain_index(x);
    CHECK(f >= 1.0 / n - 1e-15);
    CHECK(f <= 1.0 + 1e-15);
    CHECK(jain_index(y) == Approx(f).epsilon(1e-12));
  }
}

TEST_CASE("fairness tracker accumulates delivered volume") {
  FairnessTracker t(3);
  CHECK(t.index() == 1.0);
  t.accumulate(std::vector<double>{1, 0, 0}, 1.0);
  CHECK(t.index() == Approx(1.0 / 3));
  t.accumulate(std::vector<double>{0, 1, 0}, 1.0);
  t.accumulate(std::vector<double>{0, 0, 1}, 1.0);
  CHECK(t.index() == Approx(1.0));
  CHECK(t.cumulative()[2] == 1.0);

  FairnessTracker single(1);
  single.accumulate(std::vector<double>{5e6}, 1.0);
  CHECK(single.index() == 1.0);
}

TEST_CASE("uav reward") {
  const RewardWeights w;
  CHECK(uav_reward(1.0, 0.0, w) == 1.0);
  CHECK(uav_reward(1.0, 1.0, w) == 0.5);
  CHECK(uav_reward(1.0 / 200, 1.0, w) == Approx(0.0025).epsilon(1e-15));
  CHECK(uav_reward(0.8, 0.3, w) > uav_reward(0.8, 0.4, w));
  CHECK(uav_reward(0.9, 0.3, w) > uav_reward(0.8, 0.3, w));
}

TEST_CASE("objective sums over slots, ABSs and served users") {
  const RewardWeights w{0.3, 0.7};
  SlotRecord single{1.0, {0.0}, {1}};
  CHECK(slot_objective(single, RewardWeights{}) == 1.0);

  Rng rng(4);
  std::vector<SlotRecord> history;
  for (int t = 0; t < 7; ++t) {
    SlotRecord s;
    s.fairness = uniform01(rng);
    for (int b = 0; b < 4; ++b) {
      s.loads.push_back(uniform01(rng));
      s.served_users.push_back(static_cast<int>(uniform_index(rng, 30)));
    }
    history.push_back(s);
  }
  // Brute force over individual users.
  double brute = 0.0;
  for (const SlotRecord& s : history) {
    for (std::size_t b = 0; b < s.loads.size(); ++b) {
      for (int k = 0; k < s.served_users[b]; ++k) {
        brute += w.phi * s.fairness + w.psi * (1.0 - s.loads[b]);
      }
    }
  }
  CHECK(objective_value(history, w) == Approx(brute).epsilon(1e-12));
}

TEST_CASE("outage counting") {
  const std::vector<double> demand(4, 1.8e6);
  const std::vector<int> attributed = {0, 0, 1, 1};
  {
    const bool dropped[] = {false, false, false, false};
    const std::vector<double> rates = {2e6, 3e6, 1.8e6, 9e6};
    const OutageCount o = outage_count(attributed, dropped, rates, demand, 2);
    CHECK(o.total == 0);
  }
  {
    const bool dropped[] = {false, true, false, false};
    // user 1 dropped and short of demand: counted once; user 2 short.
    const std::vector<double> rates = {2e6, 0.0, 1e6, 9e6};
    const OutageCount o = outage_count(attributed, dropped, rates, demand, 2);
    CHECK(o.total == 2);
    CHECK(o.per_abs == std::vector<int>{1, 1});
  }
}
