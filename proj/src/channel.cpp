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

#include "channel.hpp"

#include <cmath>
#include <stdexcept>

namespace hapsnet {

PropagationParams PropagationParams::from_config(const SimConfig& c) {
  PropagationParams p;
  p.f_haps_mhz = c.f_haps_mhz;
  p.f_uav_ghz = c.f_uav_ghz;
  p.alpha = c.env_alpha;
  p.beta = c.env_beta;
  p.xi = c.env_xi;
  p.delta_los = c.delta_los;
  p.delta_nlos = c.delta_nlos;
  p.eta_los = c.eta_los;
  p.eta_nlos = c.eta_nlos;
  p.sigma_los = c.sigma_los;
  p.sigma_nlos = c.sigma_nlos;
  p.noise_psd_dbm_hz = c.noise_psd_dbm_hz;
  return p;
}

double haps_path_loss_db(double distance_km, double f_mhz) {
  if (!(distance_km > 0.0) || !(f_mhz > 0.0)) {
    throw std::domain_error("haps_path_loss_db: distance and frequency must be positive");
  }
  return 32.44 + 20.0 * std::log10(f_mhz) + 20.0 * std::log10(distance_km);
}

double los_probability(const Vec3& uav, const Vec3& user, const PropagationParams& params) {
  const double h_u = uav.z;
  const double h_k = user.z;
  if (!(h_u > h_k)) throw std::domain_error("los_probability: UAV must be above the user");

  const double r = horizontal_distance(uav, user);
  const int j = static_cast<int>(std::floor(r * std::sqrt(params.alpha * params.beta) / 1000.0 - 1.0));
  const double two_xi_sq = 2.0 * params.xi * params.xi;
  double p = 1.0;
  for (int n = 0; n <= j; ++n) {
    const double h = h_u - (n + 0.5) * (h_u - h_k) / (j + 1);
    p *= 1.0 - std::exp(-h * h / two_xi_sq);
  }
  return p;
}

double uav_channel_loss_db(double distance_m, LinkState state, const PropagationParams& params,
                           double shadow_db) {
  if (!(distance_m > 0.0)) throw std::domain_error("uav_channel_loss_db: zero distance");
  const bool los = state == LinkState::kLos;
  const double delta = los ? params.delta_los : params.delta_nlos;
  const double eta = los ? params.eta_los : params.eta_nlos;
  return delta + 10.0 * eta * std::log10(distance_m) + shadow_db;
}

double uav_channel_loss_db(const Vec3& uav, const Vec3& user, LinkState state,
                           const PropagationParams& params, Rng* shadowing) {
  const double sigma = state == LinkState::kLos ? params.sigma_los : params.sigma_nlos;
  const double shadow = shadowing ? sigma * standard_normal(*shadowing) : 0.0;
  return uav_channel_loss_db(distance(uav, user), state, params, shadow);
}

double expected_gain_linear(double loss_db) { return std::pow(10.0, -loss_db / 10.0); }

}  // namespace hapsnet
