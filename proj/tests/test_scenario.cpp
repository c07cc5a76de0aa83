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

#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "errors.hpp"
#include "placement.hpp"
#include "scenario.hpp"

using namespace hapsnet;
using doctest::Approx;

TEST_CASE("user kinematics") {
  const SimConfig c;
  UserState u;
  u.position = {500.0, 500.0, 1.5};
  u.speed = 1.3;
  u.direction = 0.0;
  advance_user(u, c);
  CHECK(u.position.x == Approx(501.3).epsilon(1e-12));
  CHECK(u.position.y == Approx(500.0).epsilon(1e-12));

  u.speed = 0.0;
  const Vec3 before = u.position;
  advance_user(u, c);
  CHECK(u.position == before);

  u.position.x = 999.5;
  u.speed = 1.3;
  advance_user(u, c);
  CHECK(u.position.x == Approx(999.2).epsilon(1e-12));
}

TEST_CASE("reflection stays inside the area") {
  CHECK(reflect_into(-0.4, 0.0, 1000.0) == Approx(0.4));
  CHECK(reflect_into(1000.0, 0.0, 1000.0) == 1000.0);
  CHECK(reflect_into(2300.0, 0.0, 1000.0) == Approx(300.0));
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const double x = uniform(rng, -5000.0, 5000.0);
    const double r = reflect_into(x, 0.0, 1000.0);
    CHECK(r >= 0.0);
    CHECK(r <= 1000.0);
  }
}

TEST_CASE("random walk keeps users in the area") {
  SimConfig c;
  c.n_users = 50;
  Rng rng(11);
  ScenarioState s = spawn_scenario(c, rng);
  for (int t = 0; t < 500; ++t) {
    step_user_mobility(s.users, c, rng);
    for (const UserState& u : s.users) {
      REQUIRE(u.position.x >= c.x_min);
      REQUIRE(u.position.x <= c.x_max);
      REQUIRE(u.position.y >= c.y_min);
      REQUIRE(u.position.y <= c.y_max);
      REQUIRE(u.speed <= c.v_ue_max);
      REQUIRE(u.position.z == c.user_height);
    }
  }
}

TEST_CASE("uav kinematics") {
  const SimConfig c;
  AbsState uav;
  uav.position = {400.0, 600.0, 100.0};
  CHECK(step_uav_kinematics(uav, Direction::kUp, c).position.z == 110.0);
  CHECK(step_uav_kinematics(uav, Direction::kDown, c).position.z == 90.0);
  CHECK(step_uav_kinematics(uav, Direction::kLeft, c).position.x == 390.0);
  CHECK(step_uav_kinematics(uav, Direction::kRight, c).position.x == 410.0);
  CHECK(step_uav_kinematics(uav, Direction::kForward, c).position.y == 610.0);
  CHECK(step_uav_kinematics(uav, Direction::kBackward, c).position.y == 590.0);
  CHECK(step_uav_kinematics(uav, Direction::kFixed, c).position == uav.position);
  uav.position.z = 145.0;
  CHECK(step_uav_kinematics(uav, Direction::kUp, c).position.z == 150.0);
  uav.position = {995.0, 3.0, 25.0};
  const Vec3 p = step_uav_kinematics(uav, Direction::kRight, c).position;
  CHECK(p.x == 1000.0);
  CHECK(step_uav_kinematics(uav, Direction::kDown, c).position.z == c.h_min);
  CHECK(inside_feasible_box(p, c));
}

TEST_CASE("direction tokens") {
  for (Direction d : kAllDirections) CHECK(parse_direction(direction_name(d)) == d);
  CHECK_THROWS_AS(parse_direction("sideways"), ConfigError);
}

TEST_CASE("spawn layout") {
  SimConfig c;
  Rng a(42), b(42);
  const ScenarioState s = spawn_scenario(c, a);
  REQUIRE(s.abss.size() == 6);
  CHECK(s.abss[0].kind == AbsKind::kHaps);
  CHECK(s.abss[0].position == Vec3{500.0, 500.0, 20000.0});
  CHECK(s.abss[0].tx_power_w == Approx(19.952623149688797));
  for (int i = 0; i < 6; ++i) CHECK(s.abss[i].id == i);
  for (const AbsState& u : s.uavs()) {
    CHECK(u.kind == AbsKind::kUav);
    CHECK(u.position.z == c.h_min);
    CHECK(inside_feasible_box(u.position, c));
  }
  const ScenarioState t = spawn_scenario(c, b);
  for (std::size_t k = 0; k < s.users.size(); ++k) CHECK(s.users[k].position == t.users[k].position);

  c.n_users = 0;
  CHECK_THROWS_AS(spawn_scenario(c, a), ConfigError);
}

TEST_CASE("max-min placement on four corners") {
  const std::vector<Vec2> corners = {{0, 0}, {1000, 0}, {0, 1000}, {1000, 1000}};
  const std::vector<Vec2> haps = {{500, 500}};
  const auto one = initialize_uav_positions(corners, haps, 1);
  CHECK(one[0].x == 0.0);
  CHECK(one[0].y == 0.0);
  // Every remaining corner is 707 m from the HAPS, which binds the min, so
  // the tie goes to the lowest remaining index.
  const auto two = initialize_uav_positions(corners, haps, 2);
  CHECK(two[1].x == 1000.0);
  CHECK(two[1].y == 0.0);
  // Without the central HAPS the diagonal corner wins outright.
  const std::vector<Vec2> far_haps = {{-5000, -5000}};
  const auto diag = initialize_uav_positions(corners, far_haps, 2);
  CHECK(diag[0].x == 1000.0);
  CHECK(diag[0].y == 1000.0);
  CHECK(diag[1].x == 0.0);
  CHECK(diag[1].y == 0.0);
  const auto all = initialize_uav_positions(corners, haps, 4);
  std::set<std::pair<double, double>> used;
  for (const Vec2& p : all) used.insert({p.x, p.y});
  CHECK(used.size() == 4);
  CHECK_THROWS_AS(initialize_uav_positions(corners, haps, 5), ConfigError);
}

TEST_CASE("candidate grid covers the area with cell centers") {
  const SimConfig c;
  const auto g = candidate_grid(c, 10);
  REQUIRE(g.size() == 100);
  for (const Vec2& p : g) {
    CHECK(std::fmod(p.x - 50.0, 100.0) == Approx(0.0));
    CHECK(std::fmod(p.y - 50.0, 100.0) == Approx(0.0));
  }
}
