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

#include <cmath>
#include <limits>
#include <memory>
#include <vector>

#include "doctest.h"
#include "load.hpp"
#include "selftest.hpp"

using namespace hapsnet;
using doctest::Approx;

namespace {

// One HAPS whose users all see the same gain; achievable rate C is
// 14 MHz * log2(1 + sinr), independent of loads.
struct HapsFixture {
  std::vector<AbsState> abss;
  GainMatrix gains;
  std::vector<int> assoc;
  std::vector<double> demand;
  ChannelPlan plan;
  double rate = 0.0;

  explicit HapsFixture(int n_users) : gains(1, n_users), assoc(n_users, 0), demand(n_users, 0.0) {
    AbsState h;
    h.id = 0;
    h.kind = AbsKind::kHaps;
    h.tx_power_w = 20.0;
    abss.push_back(h);
    for (int k = 0; k < n_users; ++k) gains(0, k) = 1e-13;
    const RadioSnapshot snap = snapshot();
    rate = user_rate(snap, 0, std::vector<double>{0.0});
  }
  RadioSnapshot snapshot() const { return {abss, &gains, assoc, plan}; }
  LoadProblem problem() const { return {snapshot(), demand}; }
};

}  // namespace

TEST_CASE("load contributions") {
  HapsFixture f(2);
  f.demand = {0.5 * f.rate, 0.25 * f.rate};
  const std::vector<double> rho = {0.0};
  CHECK(user_load_contribution(f.problem(), 0, rho) == Approx(0.5).epsilon(1e-14));
  CHECK(load_map(f.problem(), rho)[0] == Approx(0.75).epsilon(1e-14));
  f.demand = {0.25 * f.rate, 0.25 * f.rate};
  CHECK(load_map(f.problem(), rho)[0] == Approx(0.5).epsilon(1e-14));
  f.assoc = {kUnassociated, kUnassociated};
  CHECK(load_map(f.problem(), rho)[0] == 0.0);
}

TEST_CASE("single user at half the rate") {
  HapsFixture f(1);
  f.demand = {1.8e6};
  f.gains(0, 0) = 1e-13;
  // Pick the gain so that C = 3.6 Mbps: 14e6 log2(1 + s) = 3.6e6.
  const double sinr = std::exp2(3.6e6 / 14e6) - 1.0;
  f.gains(0, 0) = sinr * f.plan.noise_power(AbsKind::kHaps) / f.abss[0].tx_power_w;
  const LoadVector v = solve_fixed_point(f.problem(), std::vector<double>{0.5}, 500, 1e-9);
  CHECK(v.converged);
  CHECK(v.rho[0] == Approx(0.5).epsilon(1e-12));
}

TEST_CASE("zero rate user is an overload") {
  HapsFixture f(2);
  f.gains(0, 1) = 0.0;
  f.demand = {0.1 * f.rate, 1.0};
  CHECK(std::isinf(user_load_contribution(f.problem(), 1, std::vector<double>{0.0})));
  const LoadVector v = solve_fixed_point(f.problem(), std::vector<double>{0.5}, 500, 1e-9);
  CHECK(v.rho[0] == 1.0);
  const CapacityOutcome c = enforce_capacity(f.problem(), v, 500, 1e-9);
  CHECK(c.dropped == std::vector<int>{1});
  CHECK(c.loads.rho[0] == Approx(0.1).epsilon(1e-12));
}

TEST_CASE("saturated instance converges to all ones") {
  HapsFixture f(3);
  f.demand.assign(3, 2.0 * f.rate);
  const LoadVector v = solve_fixed_point(f.problem(), std::vector<double>{0.01}, 500, 1e-9);
  CHECK(v.converged);
  CHECK(v.rho[0] == 1.0);
}

TEST_CASE("capacity enforcement drops the largest contribution first") {
  HapsFixture f(3);
  f.demand = {0.5 * f.rate, 0.4 * f.rate, 0.3 * f.rate};
  const LoadVector v = solve_fixed_point(f.problem(), std::vector<double>{0.5}, 500, 1e-9);
  CHECK(v.rho[0] == 1.0);
  const CapacityOutcome c = enforce_capacity(f.problem(), v, 500, 1e-9);
  CHECK(c.dropped == std::vector<int>{0});
  CHECK(c.association == std::vector<int>{kUnassociated, 0, 0});
  CHECK(c.loads.rho[0] == Approx(0.7).epsilon(1e-12));

  HapsFixture g(2);
  g.demand = {0.4 * g.rate, 0.4 * g.rate};
  const CapacityOutcome ok = enforce_capacity(
      g.problem(), solve_fixed_point(g.problem(), std::vector<double>{0.5}, 500, 1e-9), 500, 1e-9);
  CHECK(ok.dropped.empty());
  CHECK(ok.loads.rho[0] == Approx(0.8).epsilon(1e-12));
}

TEST_CASE("fixed point is independent of the starting load") {
  Rng rng(17);
  for (int i = 0; i < 10; ++i) {
    const RandomInstance inst = make_random_instance(rng);
    const std::size_t n = inst.scenario.abss.size();
    const LoadVector a = solve_fixed_point(inst.problem(), std::vector<double>(n, 0.5), 500, 1e-9);
    const LoadVector b = solve_fixed_point(inst.problem(), std::vector<double>(n, 0.01), 500, 1e-9);
    REQUIRE(a.converged);
    REQUIRE(b.converged);
    for (std::size_t j = 0; j < n; ++j) CHECK(std::abs(a.rho[j] - b.rho[j]) < 1e-6);
  }
}

TEST_CASE("fixed point respects the iteration budget") {
  Rng rng(23);
  const RandomInstance inst = make_random_instance(rng);
  const std::size_t n = inst.scenario.abss.size();
  const LoadVector v = solve_fixed_point(inst.problem(), std::vector<double>(n, 0.5), 1, 1e-15);
  CHECK(v.iterations_used == 1);
  CHECK_FALSE(v.converged);
}

TEST_CASE("capacity enforcement leaves every ABS at or below one") {
  Rng rng(29);
  for (int i = 0; i < 20; ++i) {
    const RandomInstance inst = make_random_instance(rng);
    const std::size_t n = inst.scenario.abss.size();
    const LoadVector v = solve_fixed_point(inst.problem(), std::vector<double>(n, 0.5), 500, 1e-9);
    const CapacityOutcome c = enforce_capacity(inst.problem(), v, 500, 1e-9);
    LoadProblem reduced = inst.problem();
    reduced.snap.association = c.association;
    const auto raw = load_map(reduced, c.loads.rho);
    for (std::size_t b = 0; b < n; ++b) CHECK(raw[b] <= 1.0 + 1e-9);
    for (int k : c.dropped) CHECK(c.association[k] == kUnassociated);
  }
}

TEST_CASE("load map is a standard interference function") {
  Rng rng(31);
  for (int i = 0; i < 10; ++i) {
    const RandomInstance inst = make_random_instance(rng);
    const LoadProblem problem = inst.problem();
    const int n = static_cast<int>(inst.scenario.abss.size());
    std::vector<std::vector<double>> samples(5, std::vector<double>(n));
    for (auto& s : samples) {
      for (double& x : s) x = uniform01(rng);
    }
    const auto occ = inst.occupied();
    auto flags = std::make_unique<bool[]>(n);
    for (int b = 0; b < n; ++b) flags[b] = occ[b];
    const SifReport r = check_sif_properties(
        [&](std::span<const double> rho) { return load_map(problem, rho); }, samples,
        std::span<const bool>(flags.get(), n), rng, std::vector<double>{2.0});
    CHECK(r.checks > 0);
    CHECK(r.ok());
  }
}

TEST_CASE("sif checker reports a violating map with its witness") {
  Rng rng(1);
  const std::vector<std::vector<double>> samples = {{0.2, 0.4}};
  const bool occupied[] = {true, true};
  // Affine map without a constant term is not strictly scalable.
  const SifReport r = check_sif_properties(
      [](std::span<const double> rho) { return std::vector<double>{rho[0] + rho[1], -1.0}; },
      samples, occupied, rng);
  CHECK_FALSE(r.ok());
  bool has_witness = false;
  for (const auto& v : r.violations) has_witness |= v.find("0.2") != std::string::npos;
  CHECK(has_witness);
}
