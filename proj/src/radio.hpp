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

#ifndef HAPSNET_RADIO_HPP_
#define HAPSNET_RADIO_HPP_

#include <span>
#include <vector>

#include "channel.hpp"
#include "config.hpp"
#include "rng.hpp"
#include "scenario.hpp"

namespace hapsnet {

inline constexpr int kUnassociated = -1;

struct ChannelPlan {
  int n_uav_channels = 4;
  int n_haps_channels = 1;
  double bw_uav_total = 56e6;   // Hz
  double bw_haps_total = 14e6;  // Hz
  double noise_psd_dbm_hz = -174.0;

  static ChannelPlan from_config(const SimConfig& c);

  double channel_bandwidth(AbsKind kind) const;
  // Thermal noise over one channel, watts.
  double noise_power(AbsKind kind) const;
};

// Row-major |B| x |K| matrix of linear channel gains.
class GainMatrix {
 public:
  GainMatrix() = default;
  GainMatrix(int n_abs, int n_users)
      : n_abs_(n_abs), n_users_(n_users), data_(static_cast<std::size_t>(n_abs) * n_users) {}

  int n_abs() const { return n_abs_; }
  int n_users() const { return n_users_; }
  double& operator()(int b, int k) { return data_[static_cast<std::size_t>(b) * n_users_ + k]; }
  double operator()(int b, int k) const {
    return data_[static_cast<std::size_t>(b) * n_users_ + k];
  }

 private:
  int n_abs_ = 0;
  int n_users_ = 0;
  std::vector<double> data_;
};

// Per-slot random channel state of every UAV-user link: shadowing samples for
// both link states and a uniform draw for Bernoulli LoS sampling. Indexed
// [uav * n_users + user].
struct SlotFading {
  int n_users = 0;
  std::vector<double> shadow_los_db;
  std::vector<double> shadow_nlos_db;
  std::vector<double> los_draw;
};

SlotFading draw_slot_fading(int n_uavs, int n_users, const PropagationParams& params,
                            bool shadowing, Rng& shadow_rng, Rng& los_rng);

// Shadowing-free, fully blended fading (deterministic gains).
SlotFading quiet_fading(int n_uavs, int n_users);

GainMatrix compute_gains(std::span<const AbsState> abss, std::span<const UserState> users,
                         int n_haps, const PropagationParams& params, LosMode mode,
                         const SlotFading& fading);

// Everything the SINR and load computations need about one slot.
struct RadioSnapshot {
  std::span<const AbsState> abss;
  const GainMatrix* gains = nullptr;
  std::span<const int> association;  // per user: serving ABS id or kUnassociated
  ChannelPlan plan;
};

// Co-channel SINR of a UAV-served user; interference from other UAVs on the
// same channel is weighted by their load. Throws ContractViolation if the
// user is not served by a UAV.
double uav_sinr(const RadioSnapshot& snap, int user, std::span<const double> loads);

// Interference-free SINR of a HAPS-served user.
double haps_sinr(const RadioSnapshot& snap, int user);

// Shannon rate over one channel of the serving tier, bits/s.
double achievable_rate(double sinr, const ChannelPlan& plan, AbsKind kind);

// Rate of `user` from its serving ABS at the given loads; 0 when unassociated.
double user_rate(const RadioSnapshot& snap, int user, std::span<const double> loads);

// Max received power association; ties go to the lowest ABS id.
std::vector<int> associate_users(std::span<const AbsState> abss, const GainMatrix& gains);

struct LinkBudget {
  int abs_id = 0;
  int user_id = 0;
  double gain = 0.0;
  double sinr = 0.0;
  double rate = 0.0;
};

// One budget per associated user.
std::vector<LinkBudget> build_link_budgets(const RadioSnapshot& snap,
                                           std::span<const double> loads);

}  // namespace hapsnet

#endif  // HAPSNET_RADIO_HPP_
