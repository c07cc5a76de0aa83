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

#ifndef HAPSNET_CHANNEL_HPP_
#define HAPSNET_CHANNEL_HPP_

#include "config.hpp"
#include "geometry.hpp"
#include "rng.hpp"

namespace hapsnet {

struct PropagationParams {
  double f_haps_mhz = 2110.0;
  double f_uav_ghz = 28.0;
  double alpha = 0.1;   // built-up land fraction
  double beta = 750.0;  // buildings per km^2
  double xi = 8.0;      // building height scale, meters
  double delta_los = 61.4;
  double delta_nlos = 61.4;
  double eta_los = 2.0;
  double eta_nlos = 3.0;
  double sigma_los = 5.8;
  double sigma_nlos = 8.7;
  double noise_psd_dbm_hz = -174.0;

  static PropagationParams from_config(const SimConfig& c);
};

enum class LinkState { kLos, kNlos };

// Free-space loss of a HAPS link: 32.44 + 20 log10(f_MHz) + 20 log10(d_km).
// Throws std::domain_error for nonpositive inputs.
double haps_path_loss_db(double distance_km, double f_mhz);

// Probability of an unobstructed UAV-user link from the building statistics
// (alpha, beta, xi). Throws std::domain_error unless the UAV is above the
// user.
double los_probability(const Vec3& uav, const Vec3& user, const PropagationParams& params);

// Log-distance UAV link loss delta + 10 * eta * log10(d) + shadowing, with d
// the 3D distance in meters. `shadowing` may be null to disable the Gaussian
// term. Throws std::domain_error for coincident endpoints.
double uav_channel_loss_db(const Vec3& uav, const Vec3& user, LinkState state,
                           const PropagationParams& params, Rng* shadowing);

// Same, with an explicit shadowing sample in dB.
double uav_channel_loss_db(double distance_m, LinkState state, const PropagationParams& params,
                           double shadow_db);

// Blends LoS/NLoS losses in dB by the LoS probability.
inline double blended_loss_db(double pr_los, double loss_los_db, double loss_nlos_db) {
  return pr_los * loss_los_db + (1.0 - pr_los) * loss_nlos_db;
}

// dB loss to linear power gain.
double expected_gain_linear(double loss_db);

}  // namespace hapsnet

#endif  // HAPSNET_CHANNEL_HPP_
