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

#ifndef HAPSNET_SELFTEST_HPP_
#define HAPSNET_SELFTEST_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "config.hpp"
#include "load.hpp"
#include "radio.hpp"
#include "rng.hpp"
#include "scenario.hpp"

namespace hapsnet {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// A random one-slot load-coupling instance: one HAPS, 2 to 6 UAVs at random
// feasible positions and channels, 20 to 200 users, shadowed gains.
struct RandomInstance {
  SimConfig config;
  ScenarioState scenario;
  GainMatrix gains;
  std::vector<int> association;
  std::vector<double> demand;
  ChannelPlan plan;

  LoadProblem problem() const;
  std::vector<bool> occupied() const;
};

RandomInstance make_random_instance(Rng& rng);

SuiteResult sif_axiom_suite(int instances, std::uint64_t seed);
SuiteResult fixed_point_suite(int instances, std::uint64_t seed);
SuiteResult gradient_suite(int points, std::uint64_t seed);
SuiteResult grid_dqn_suite(std::uint64_t seed);
SuiteResult closed_form_suite();

// The suites above at their acceptance sizes.
std::vector<SuiteResult> run_selftest(std::uint64_t seed = 1);

// Optimal actions of the 5x5 grid used by grid_dqn_suite, by value
// iteration: for each cell, the set of optimal action indices (empty for the
// goal). Exposed for tests.
std::vector<std::vector<int>> grid_optimal_actions(double gamma);

}  // namespace hapsnet

#endif  // HAPSNET_SELFTEST_HPP_
