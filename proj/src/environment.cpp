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

#include "environment.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

#include "errors.hpp"

namespace hapsnet {
namespace {

SimConfig apply_scheme(SimConfig c, Scheme scheme) {
  if (!scheme_uses_haps(scheme)) c.n_haps = 0;
  c.validate();
  return c;
}

}  // namespace

Environment::Environment(SimConfig config, Scheme scheme, std::uint64_t seed)
    : config_(apply_scheme(std::move(config), scheme)),
      scheme_(scheme),
      streams_(seed),
      spawn_rng_(streams_.stream("spawn")),
      mobility_rng_(streams_.stream("mobility")),
      shadow_rng_(streams_.stream("shadowing")),
      los_rng_(streams_.stream("los")),
      channel_rng_(streams_.stream("channels")),
      prop_(PropagationParams::from_config(config_)),
      plan_(ChannelPlan::from_config(config_)),
      weights_{config_.phi, config_.psi} {
  config_.rng_seed = seed;
  for (int u = 0; u < config_.n_uavs; ++u) {
    agents_.push_back(make_agent(scheme_, config_, streams_, u));
  }
  demand_.assign(config_.n_users, config_.user_demand);
}

void Environment::begin_episode() {
  ++episode_;
  slot_ = 0;
  scenario_ = spawn_scenario(config_, spawn_rng_);
  const auto channels = init_channels(config_.n_uavs, config_.n_uav_channels, channel_rng_);
  auto uavs = scenario_.uavs();
  for (int u = 0; u < config_.n_uavs; ++u) {
    uavs[u].position.z = agents_[u]->start_altitude(config_);
    uavs[u].channel = channels[u];
  }
  fairness_ = FairnessTracker(config_.n_users);
  association_.assign(config_.n_users, kUnassociated);
}

SlotMetrics Environment::step() {
  if (episode_ < 0) begin_episode();
  const int n_users = config_.n_users;
  const int n_abs = static_cast<int>(scenario_.abss.size());
  const int n_uavs = scenario_.n_uavs();

  // Mobility and this slot's random channel state.
  step_user_mobility(scenario_.users, config_, mobility_rng_);
  const bool random_fading = config_.shadowing || config_.los_mode == LosMode::kBernoulli;
  const SlotFading fading =
      random_fading
          ? draw_slot_fading(n_uavs, n_users, prop_, config_.shadowing, shadow_rng_, los_rng_)
          : quiet_fading(n_uavs, n_users);

  // Association against the ABS layout at the start of the slot.
  if (slot_ % config_.association_period == 0) {
    const GainMatrix gains = compute_gains(scenario_.abss, scenario_.users, scenario_.n_haps,
                                           prop_, config_.los_mode, fading);
    association_ = associate_users(scenario_.abss, gains);
  }
  for (int k = 0; k < n_users; ++k) scenario_.users[k].associated_abs = association_[k];

  // UAV actions.
  const std::vector<AbsState> before(scenario_.uavs().begin(), scenario_.uavs().end());
  std::vector<int> actions(n_uavs);
  for (int u = 0; u < n_uavs; ++u) {
    actions[u] = agents_[u]->select(before[u]);
    const UavAction a = agents_[u]->actions().decode(actions[u]);
    AbsState moved = step_uav_kinematics(before[u], a.direction, config_);
    moved.channel = a.channel;
    scenario_.uavs()[u] = moved;
  }

  // Link budgets and the load fixed point.
  const GainMatrix gains = compute_gains(scenario_.abss, scenario_.users, scenario_.n_haps, prop_,
                                         config_.los_mode, fading);
  LoadProblem problem{RadioSnapshot{scenario_.abss, &gains, association_, plan_}, demand_};
  const std::vector<double> rho0(n_abs, config_.rho0);
  const LoadVector solved = solve_fixed_point(problem, rho0, config_.n_fp, config_.fp_tol);
  const CapacityOutcome capped = enforce_capacity(problem, solved, config_.n_fp, config_.fp_tol);

  // Delivered rates and outage.
  const RadioSnapshot served{scenario_.abss, &gains, capped.association, plan_};
  std::vector<double> rates(n_users, 0.0);
  auto dropped_flags = std::make_unique<bool[]>(n_users);
  for (int k : capped.dropped) dropped_flags[k] = true;
  for (int k = 0; k < n_users; ++k) {
    rates[k] = user_rate(served, k, capped.loads.rho);
    scenario_.users[k].in_outage = dropped_flags[k] || rates[k] < demand_[k];
  }
  const std::span<const bool> dropped_span(dropped_flags.get(), n_users);
  const OutageCount outage = outage_count(association_, dropped_span, rates, demand_, n_abs);

  // Fairness broadcast, then per-UAV reward and learning.
  fairness_.accumulate(rates, config_.slot_duration);
  const double fairness = fairness_.index();

  SlotMetrics m;
  m.episode = episode_;
  m.slot = slot_;
  m.fairness = fairness;
  m.loads = capped.loads.rho;
  m.load_converged = solved.converged && capped.loads.converged;
  m.mean_load = n_abs > 0 ? std::accumulate(m.loads.begin(), m.loads.end(), 0.0) / n_abs : 0.0;
  m.outage_total = outage.total;
  m.outage_per_abs = static_cast<double>(outage.total) / n_abs;
  m.mean_user_rate = std::accumulate(rates.begin(), rates.end(), 0.0) / n_users;
  m.dropped = static_cast<int>(capped.dropped.size());

  SlotRecord record;
  record.fairness = fairness;
  record.loads = m.loads;
  record.served_users.assign(n_abs, 0);
  for (int k = 0; k < n_users; ++k) {
    const int b = capped.association[k];
    if (b == kUnassociated) continue;
    ++record.served_users[b];
    if (scenario_.abss[b].kind == AbsKind::kHaps) ++m.haps_users;
  }
  m.objective = slot_objective(record, weights_);

  m.uav_rewards.resize(n_uavs);
  for (int u = 0; u < n_uavs; ++u) {
    const int id = scenario_.n_haps + u;
    const double r = uav_reward(fairness, m.loads[id], weights_);
    m.uav_rewards[u] = r;
    agents_[u]->learn(before[u], actions[u], r, scenario_.uavs()[u]);
  }
  m.mean_uav_reward =
      n_uavs > 0 ? std::accumulate(m.uav_rewards.begin(), m.uav_rewards.end(), 0.0) / n_uavs
                 : 0.0;

  scenario_.slot = ++slot_;
  return m;
}

EpisodeLog Environment::run_episode(int n_slots) {
  EpisodeLog log;
  if (n_slots <= 0) return log;
  begin_episode();
  log.reserve(n_slots);
  for (int t = 0; t < n_slots; ++t) log.push_back(step());
  return log;
}

}  // namespace hapsnet
