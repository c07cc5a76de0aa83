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
#include <vector>

#include "doctest.h"
#include "errors.hpp"
#include "radio.hpp"

using namespace hapsnet;
using doctest::Approx;

namespace {

AbsState make_abs(int id, AbsKind kind, double power_w, int channel = 0) {
  AbsState a;
  a.id = id;
  a.kind = kind;
  a.tx_power_w = power_w;
  a.channel = channel;
  a.position = {0.0, 0.0, kind == AbsKind::kHaps ? 20000.0 : 100.0};
  return a;
}

}  // namespace

TEST_CASE("channel plan bandwidth and noise") {
  const ChannelPlan plan;
  CHECK(plan.channel_bandwidth(AbsKind::kUav) == 14e6);
  CHECK(plan.channel_bandwidth(AbsKind::kHaps) == 14e6);
  CHECK(plan.noise_power(AbsKind::kUav) == Approx(5.57350038774896e-14).epsilon(1e-12));
  CHECK(plan.noise_power(AbsKind::kHaps) == Approx(5.57350038774896e-14).epsilon(1e-12));
}

TEST_CASE("uav sinr with load-weighted interference") {
  const std::vector<AbsState> abss = {make_abs(0, AbsKind::kUav, 1.0, 2),
                                      make_abs(1, AbsKind::kUav, 1.0, 2),
                                      make_abs(2, AbsKind::kUav, 1.0, 3)};
  GainMatrix g(3, 1);
  g(0, 0) = 1e-11;
  g(1, 0) = 1e-12;
  g(2, 0) = 5e-11;  // other channel: no interference
  const std::vector<int> assoc = {0};
  const RadioSnapshot snap{abss, &g, assoc, ChannelPlan{}};
  const double noise = snap.plan.noise_power(AbsKind::kUav);

  const std::vector<double> full = {0.3, 1.0, 1.0};
  CHECK(uav_sinr(snap, 0, full) == Approx(9.47207392316455).epsilon(1e-12));
  const std::vector<double> idle = {0.3, 0.0, 1.0};
  CHECK(uav_sinr(snap, 0, idle) == Approx(1e-11 / noise).epsilon(1e-14));

  const std::vector<int> none = {kUnassociated};
  const RadioSnapshot orphan{abss, &g, none, ChannelPlan{}};
  CHECK_THROWS_AS(uav_sinr(orphan, 0, full), ContractViolation);
  CHECK(user_rate(orphan, 0, full) == 0.0);
}

TEST_CASE("haps sinr is interference free") {
  const std::vector<AbsState> abss = {make_abs(0, AbsKind::kHaps, dbm_to_watts(43.0)),
                                      make_abs(1, AbsKind::kUav, 1.0)};
  GainMatrix g(2, 2);
  g(0, 0) = std::pow(10.0, -124.946249019233475 / 10.0);
  g(1, 0) = 1e-9;
  g(0, 1) = 0.0;
  const std::vector<int> assoc = {0, 0};
  const RadioSnapshot snap{abss, &g, assoc, ChannelPlan{}};
  CHECK(haps_sinr(snap, 0) == Approx(114.616478875737).epsilon(1e-11));
  CHECK(haps_sinr(snap, 1) == 0.0);
}

TEST_CASE("achievable rate") {
  const ChannelPlan plan;
  CHECK(achievable_rate(0.0, plan, AbsKind::kUav) == 0.0);
  CHECK(achievable_rate(1.0, plan, AbsKind::kUav) == Approx(14e6).epsilon(1e-14));
  CHECK(achievable_rate(3.0, plan, AbsKind::kUav) == Approx(28e6).epsilon(1e-14));
}

TEST_CASE("max received power association") {
  const std::vector<AbsState> abss = {make_abs(0, AbsKind::kUav, 2.0),
                                      make_abs(1, AbsKind::kUav, 1.0),
                                      make_abs(2, AbsKind::kUav, 1.0)};
  GainMatrix g(3, 3);
  // user 0: p1 g1 = 2e-12 > p2 g2 = 1e-12 (power 2 W, gain 1e-12 vs 1 W, 1e-12)
  g(0, 0) = 1e-12; g(1, 0) = 1e-12; g(2, 0) = 0.5e-12;
  // user 1: exact tie between ABS 1 and 2
  g(0, 1) = 1e-14; g(1, 1) = 3e-12; g(2, 1) = 3e-12;
  // user 2: ABS 2 strongest
  g(0, 2) = 1e-13; g(1, 2) = 1e-13; g(2, 2) = 4e-13;
  const auto assoc = associate_users(abss, g);
  CHECK(assoc == std::vector<int>{0, 1, 2});
}

TEST_CASE("gain matrix from geometry") {
  SimConfig c;
  c.n_uavs = 2;
  c.n_users = 30;
  Rng rng(9);
  ScenarioState s = spawn_scenario(c, rng);
  const auto params = PropagationParams::from_config(c);
  const SlotFading quiet = quiet_fading(c.n_uavs, c.n_users);
  const GainMatrix g = compute_gains(s.abss, s.users, s.n_haps, params, LosMode::kBlend, quiet);
  for (int k = 0; k < c.n_users; ++k) {
    const double d_km = distance(s.abss[0].position, s.users[k].position) / 1000.0;
    CHECK(g(0, k) == Approx(std::pow(10.0, -haps_path_loss_db(d_km, 2110.0) / 10.0)));
    for (int b = 1; b < 3; ++b) {
      const double d = distance(s.abss[b].position, s.users[k].position);
      const double pr = los_probability(s.abss[b].position, s.users[k].position, params);
      const double loss = pr * (61.4 + 20 * std::log10(d)) + (1 - pr) * (61.4 + 30 * std::log10(d));
      CHECK(g(b, k) == Approx(std::pow(10.0, -loss / 10.0)).epsilon(1e-12));
    }
  }
}

TEST_CASE("bernoulli link state uses the los draw") {
  SimConfig c;
  c.n_uavs = 1;
  c.n_haps = 0;
  c.n_users = 1;
  Rng rng(2);
  ScenarioState s = spawn_scenario(c, rng);
  const auto params = PropagationParams::from_config(c);
  SlotFading f = quiet_fading(1, 1);
  f.los_draw[0] = 0.0;  // always below pr
  const double los = compute_gains(s.abss, s.users, 0, params, LosMode::kBernoulli, f)(0, 0);
  f.los_draw[0] = 1.0;  // never below pr
  const double nlos = compute_gains(s.abss, s.users, 0, params, LosMode::kBernoulli, f)(0, 0);
  const double d = distance(s.abss[0].position, s.users[0].position);
  CHECK(los == Approx(std::pow(10.0, -(61.4 + 20 * std::log10(d)) / 10.0)).epsilon(1e-12));
  CHECK(nlos == Approx(std::pow(10.0, -(61.4 + 30 * std::log10(d)) / 10.0)).epsilon(1e-12));
}
