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

#include "radio.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace hapsnet {

ChannelPlan ChannelPlan::from_config(const SimConfig& c) {
  ChannelPlan p;
  p.n_uav_channels = c.n_uav_channels;
  p.n_haps_channels = c.n_haps_channels;
  p.bw_uav_total = c.bw_uav;
  p.bw_haps_total = c.bw_haps;
  p.noise_psd_dbm_hz = c.noise_psd_dbm_hz;
  return p;
}

double ChannelPlan::channel_bandwidth(AbsKind kind) const {
  return kind == AbsKind::kUav ? bw_uav_total / n_uav_channels
                               : bw_haps_total / n_haps_channels;
}

double ChannelPlan::noise_power(AbsKind kind) const {
  const double dbm = noise_psd_dbm_hz + 10.0 * std::log10(channel_bandwidth(kind));
  return dbm_to_watts(dbm);
}

SlotFading draw_slot_fading(int n_uavs, int n_users, const PropagationParams& params,
                            bool shadowing, Rng& shadow_rng, Rng& los_rng) {
  SlotFading f = quiet_fading(n_uavs, n_users);
  const std::size_t n = f.los_draw.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (shadowing) {
      f.shadow_los_db[i] = params.sigma_los * standard_normal(shadow_rng);
      f.shadow_nlos_db[i] = params.sigma_nlos * standard_normal(shadow_rng);
    }
    f.los_draw[i] = uniform01(los_rng);
  }
  return f;
}

SlotFading quiet_fading(int n_uavs, int n_users) {
  const std::size_t n = static_cast<std::size_t>(n_uavs) * n_users;
  SlotFading f;
  f.n_users = n_users;
  f.shadow_los_db.assign(n, 0.0);
  f.shadow_nlos_db.assign(n, 0.0);
  f.los_draw.assign(n, 0.5);
  return f;
}

GainMatrix compute_gains(std::span<const AbsState> abss, std::span<const UserState> users,
                         int n_haps, const PropagationParams& params, LosMode mode,
                         const SlotFading& fading) {
  const int n_abs = static_cast<int>(abss.size());
  const int n_users = static_cast<int>(users.size());
  GainMatrix g(n_abs, n_users);
  for (int b = 0; b < n_abs; ++b) {
    const auto& abs = abss[b];
    for (int k = 0; k < n_users; ++k) {
      const auto& pos = users[k].position;
      double loss;
      if (abs.kind == AbsKind::kHaps) {
        loss = haps_path_loss_db(distance(abs.position, pos) / 1000.0, params.f_haps_mhz);
      } else {
        const std::size_t i = static_cast<std::size_t>(b - n_haps) * fading.n_users + k;
        const double d = distance(abs.position, pos);
        const double pr = los_probability(abs.position, pos, params);
        const double l_los = uav_channel_loss_db(d, LinkState::kLos, params, fading.shadow_los_db[i]);
        const double l_nlos =
            uav_channel_loss_db(d, LinkState::kNlos, params, fading.shadow_nlos_db[i]);
        if (mode == LosMode::kBlend) {
          loss = blended_loss_db(pr, l_los, l_nlos);
        } else {
          loss = fading.los_draw[i] < pr ? l_los : l_nlos;
        }
      }
      g(b, k) = expected_gain_linear(loss);
    }
  }
  return g;
}

namespace {

int serving_abs(const RadioSnapshot& snap, int user) {
  if (user < 0 || user >= static_cast<int>(snap.association.size())) {
    throw ContractViolation("user index out of range");
  }
  return snap.association[user];
}

}  // namespace

double uav_sinr(const RadioSnapshot& snap, int user, std::span<const double> loads) {
  const int u = serving_abs(snap, user);
  if (u == kUnassociated || snap.abss[u].kind != AbsKind::kUav) {
    throw ContractViolation("uav_sinr: user " + std::to_string(user) + " is not served by a UAV");
  }
  const auto& g = *snap.gains;
  const auto& serving = snap.abss[u];
  double interference = 0.0;
  for (const auto& other : snap.abss) {
    if (other.kind != AbsKind::kUav || other.id == u || other.channel != serving.channel) continue;
    interference += other.tx_power_w * g(other.id, user) * loads[other.id];
  }
  return serving.tx_power_w * g(u, user) / (interference + snap.plan.noise_power(AbsKind::kUav));
}

double haps_sinr(const RadioSnapshot& snap, int user) {
  const int m = serving_abs(snap, user);
  if (m == kUnassociated || snap.abss[m].kind != AbsKind::kHaps) {
    throw ContractViolation("haps_sinr: user " + std::to_string(user) +
                            " is not served by a HAPS");
  }
  return snap.abss[m].tx_power_w * (*snap.gains)(m, user) /
         snap.plan.noise_power(AbsKind::kHaps);
}

double achievable_rate(double sinr, const ChannelPlan& plan, AbsKind kind) {
  return plan.channel_bandwidth(kind) * std::log2(1.0 + sinr);
}

double user_rate(const RadioSnapshot& snap, int user, std::span<const double> loads) {
  const int b = serving_abs(snap, user);
  if (b == kUnassociated) return 0.0;
  const AbsKind kind = snap.abss[b].kind;
  const double sinr = kind == AbsKind::kUav ? uav_sinr(snap, user, loads) : haps_sinr(snap, user);
  return achievable_rate(sinr, snap.plan, kind);
}

std::vector<int> associate_users(std::span<const AbsState> abss, const GainMatrix& gains) {
  std::vector<int> assoc(gains.n_users(), kUnassociated);
  for (int k = 0; k < gains.n_users(); ++k) {
    double best = -1.0;
    for (const auto& abs : abss) {
      const double rx = abs.tx_power_w * gains(abs.id, k);
      if (rx > best) {
        best = rx;
        assoc[k] = abs.id;
      }
    }
  }
  return assoc;
}

std::vector<LinkBudget> build_link_budgets(const RadioSnapshot& snap,
                                           std::span<const double> loads) {
  std::vector<LinkBudget> out;
  for (int k = 0; k < static_cast<int>(snap.association.size()); ++k) {
    const int b = snap.association[k];
    if (b == kUnassociated) continue;
    const AbsKind kind = snap.abss[b].kind;
    LinkBudget lb;
    lb.abs_id = b;
    lb.user_id = k;
    lb.gain = (*snap.gains)(b, k);
    lb.sinr = kind == AbsKind::kUav ? uav_sinr(snap, k, loads) : haps_sinr(snap, k);
    lb.rate = achievable_rate(lb.sinr, snap.plan, kind);
    out.push_back(lb);
  }
  return out;
}

}  // namespace hapsnet
