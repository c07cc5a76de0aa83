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

#ifndef HAPSNET_SCENARIO_HPP_
#define HAPSNET_SCENARIO_HPP_

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "config.hpp"
#include "geometry.hpp"
#include "rng.hpp"

namespace hapsnet {

enum class AbsKind { kHaps, kUav };

// UAV movement set. up/down move along z, left/right along x,
// forward/backward along y.
enum class Direction { kUp, kDown, kLeft, kRight, kForward, kBackward, kFixed };

inline constexpr std::array<Direction, 7> kAllDirections = {
    Direction::kUp,      Direction::kDown,     Direction::kLeft, Direction::kRight,
    Direction::kForward, Direction::kBackward, Direction::kFixed};

std::string_view direction_name(Direction d);
// Throws ConfigError for unknown tokens.
Direction parse_direction(std::string_view token);

struct AbsState {
  int id = 0;
  AbsKind kind = AbsKind::kUav;
  Vec3 position;
  int channel = 0;
  double tx_power_w = 0.0;
};

struct UserState {
  int id = 0;
  Vec3 position;
  double speed = 0.0;
  double direction = 0.0;  // radians, [0, 2*pi)
  std::optional<int> associated_abs;
  bool in_outage = false;
};

// HAPSs occupy abss[0, n_haps), UAVs follow. ABS ids equal their index.
struct ScenarioState {
  std::vector<AbsState> abss;
  std::vector<UserState> users;
  int n_haps = 0;
  int slot = 0;

  int n_uavs() const { return static_cast<int>(abss.size()) - n_haps; }
  std::span<AbsState> uavs() { return std::span(abss).subspan(n_haps); }
  std::span<const AbsState> uavs() const { return std::span(abss).subspan(n_haps); }
};

double dbm_to_watts(double dbm);

// Specular reflection of `x` into [lo, hi].
double reflect_into(double x, double lo, double hi);

// Moves a user along its current (speed, direction) for one slot, reflecting
// at the area edges.
void advance_user(UserState& user, const SimConfig& config);

// Random-walk step: speed and heading redrawn every slot, zero pause time,
// reflection at the area edges.
void step_user_mobility(std::span<UserState> users, const SimConfig& config, Rng& rng);

// Moves a UAV by v_uav * slot_duration along the chosen axis; the result is
// clamped to the feasible box.
AbsState step_uav_kinematics(const AbsState& uav, Direction direction,
                             const SimConfig& config);

bool inside_feasible_box(const Vec3& p, const SimConfig& config);

// Users uniform over the area at user_height, HAPSs at haps_height on the
// area's horizontal midline (a single HAPS sits at the center), UAVs placed
// by the max-min-distance heuristic at h_min on channel 0.
ScenarioState spawn_scenario(const SimConfig& config, Rng& rng);

}  // namespace hapsnet

#endif  // HAPSNET_SCENARIO_HPP_
