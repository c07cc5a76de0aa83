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

#include "scenario.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"
#include "placement.hpp"

namespace hapsnet {

std::string_view direction_name(Direction d) {
  switch (d) {
    case Direction::kUp: return "up";
    case Direction::kDown: return "down";
    case Direction::kLeft: return "left";
    case Direction::kRight: return "right";
    case Direction::kForward: return "forward";
    case Direction::kBackward: return "backward";
    case Direction::kFixed: return "fixed";
  }
  return "?";
}

Direction parse_direction(std::string_view token) {
  for (Direction d : kAllDirections) {
    if (direction_name(d) == token) return d;
  }
  throw ConfigError("unknown direction '" + std::string(token) + "'");
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double reflect_into(double x, double lo, double hi) {
  const double span = hi - lo;
  if (span <= 0.0) return lo;
  // Fold onto a period of 2*span, then mirror the upper half.
  double t = std::fmod(x - lo, 2.0 * span);
  if (t < 0.0) t += 2.0 * span;
  if (t > span) t = 2.0 * span - t;
  return lo + t;
}

void advance_user(UserState& user, const SimConfig& config) {
  const double step = user.speed * config.slot_duration;
  user.position.x =
      reflect_into(user.position.x + step * std::cos(user.direction), config.x_min, config.x_max);
  user.position.y =
      reflect_into(user.position.y + step * std::sin(user.direction), config.y_min, config.y_max);
}

void step_user_mobility(std::span<UserState> users, const SimConfig& config, Rng& rng) {
  for (auto& user : users) {
    user.speed = uniform(rng, config.v_ue_min, config.v_ue_max);
    user.direction = uniform(rng, 0.0, 2.0 * M_PI);
    advance_user(user, config);
  }
}

AbsState step_uav_kinematics(const AbsState& uav, Direction direction,
                             const SimConfig& config) {
  AbsState next = uav;
  const double step = config.v_uav * config.slot_duration;
  auto& p = next.position;
  switch (direction) {
    case Direction::kUp: p.z += step; break;
    case Direction::kDown: p.z -= step; break;
    case Direction::kLeft: p.x -= step; break;
    case Direction::kRight: p.x += step; break;
    case Direction::kForward: p.y += step; break;
    case Direction::kBackward: p.y -= step; break;
    case Direction::kFixed: break;
  }
  p.x = std::clamp(p.x, config.x_min, config.x_max);
  p.y = std::clamp(p.y, config.y_min, config.y_max);
  p.z = std::clamp(p.z, config.h_min, config.h_max);
  return next;
}

bool inside_feasible_box(const Vec3& p, const SimConfig& config) {
  return p.x >= config.x_min && p.x <= config.x_max && p.y >= config.y_min &&
         p.y <= config.y_max && p.z >= config.h_min && p.z <= config.h_max;
}

ScenarioState spawn_scenario(const SimConfig& config, Rng& rng) {
  if (config.n_users <= 0) throw ConfigError("scenario needs at least one user");
  if (config.n_haps < 0 || config.n_uavs < 0 || config.n_haps + config.n_uavs == 0) {
    throw ConfigError("scenario needs at least one ABS");
  }

  ScenarioState s;
  s.n_haps = config.n_haps;

  std::vector<Vec2> haps_xy;
  const double y_mid = 0.5 * (config.y_min + config.y_max);
  for (int m = 0; m < config.n_haps; ++m) {
    const double x = config.x_min + (m + 0.5) * config.area_width() / config.n_haps;
    haps_xy.push_back({x, y_mid});
    s.abss.push_back({m, AbsKind::kHaps, {x, y_mid, config.haps_height}, 0,
                      dbm_to_watts(config.p_haps_dbm)});
  }

  const auto uav_xy = initialize_uav_positions(candidate_grid(config, config.candidate_grid),
                                               haps_xy, config.n_uavs);
  for (int u = 0; u < config.n_uavs; ++u) {
    const int id = config.n_haps + u;
    s.abss.push_back({id, AbsKind::kUav, {uav_xy[u].x, uav_xy[u].y, config.h_min}, 0,
                      dbm_to_watts(config.p_uav_dbm)});
  }

  s.users.reserve(config.n_users);
  for (int k = 0; k < config.n_users; ++k) {
    UserState user;
    user.id = k;
    user.position.x = uniform(rng, config.x_min, config.x_max);
    user.position.y = uniform(rng, config.y_min, config.y_max);
    user.position.z = config.user_height;
    s.users.push_back(user);
  }
  return s;
}

}  // namespace hapsnet
