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
#include <stdexcept>

#include "channel.hpp"
#include "doctest.h"

using namespace hapsnet;
using doctest::Approx;

TEST_CASE("haps free-space loss") {
  CHECK(haps_path_loss_db(20.0, 2110.0) == Approx(124.946249019).epsilon(1e-11));
  CHECK(haps_path_loss_db(1.0, 2110.0) == Approx(98.925649106).epsilon(1e-11));
  CHECK(haps_path_loss_db(1.0, 1.0) == Approx(32.44).epsilon(1e-14));
  CHECK_THROWS_AS(haps_path_loss_db(0.0, 2110.0), std::domain_error);
  CHECK_THROWS_AS(haps_path_loss_db(1.0, -1.0), std::domain_error);
}

TEST_CASE("line-of-sight probability") {
  const PropagationParams p;
  CHECK(los_probability({500, 500, 100}, {500, 500, 1.5}, p) == 1.0);
  // J = 7 blocking terms.
  CHECK(los_probability({0, 0, 100}, {1000, 0, 1.5}, p) == Approx(0.351019578417).epsilon(1e-10));
  CHECK_THROWS_AS(los_probability({0, 0, 1.0}, {10, 0, 1.5}, p), std::domain_error);
}

TEST_CASE("los probability decreases with distance and rises with altitude") {
  const PropagationParams p;
  double prev = 1.0;
  for (double r = 0.0; r <= 1400.0; r += 50.0) {
    const double v = los_probability({0, 0, 60}, {r, 0, 1.5}, p);
    CHECK(v <= prev + 1e-15);
    CHECK(v >= 0.0);
    prev = v;
  }
  for (double r : {200.0, 600.0, 1000.0}) {
    double last = 0.0;
    for (double h = 22.5; h <= 150.0; h += 10.0) {
      const double v = los_probability({0, 0, h}, {r, 0, 1.5}, p);
      CHECK(v >= last - 1e-15);
      last = v;
    }
  }
}

TEST_CASE("uav log-distance loss") {
  const PropagationParams p;
  CHECK(uav_channel_loss_db(1.0, LinkState::kLos, p, 0.0) == Approx(61.4).epsilon(1e-14));
  CHECK(uav_channel_loss_db(100.0, LinkState::kLos, p, 0.0) == Approx(101.4).epsilon(1e-14));
  CHECK(uav_channel_loss_db(100.0, LinkState::kNlos, p, 0.0) == Approx(121.4).epsilon(1e-14));
  CHECK(uav_channel_loss_db(100.0, LinkState::kLos, p, 3.0) == Approx(104.4).epsilon(1e-14));
  CHECK(uav_channel_loss_db({0, 0, 100}, {0, 0, 0}, LinkState::kLos, p, nullptr) ==
        Approx(101.4).epsilon(1e-14));
  CHECK_THROWS_AS(uav_channel_loss_db(0.0, LinkState::kLos, p, 0.0), std::domain_error);
  CHECK_THROWS_AS(uav_channel_loss_db({1, 2, 3}, {1, 2, 3}, LinkState::kLos, p, nullptr),
                  std::domain_error);
}

TEST_CASE("shadowing samples have the configured spread") {
  const PropagationParams p;
  Rng rng(5);
  constexpr int n = 20000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = uav_channel_loss_db({0, 0, 100}, {0, 0, 0}, LinkState::kNlos, p, &rng) - 121.4;
    sum += x;
    sq += x * x;
  }
  const double mean = sum / n;
  CHECK(std::abs(mean) < 0.2);
  CHECK(std::sqrt(sq / n - mean * mean) == Approx(8.7).epsilon(0.03));
}

TEST_CASE("blended loss and linear gain") {
  CHECK(blended_loss_db(1.0, 100.0, 120.0) == 100.0);
  CHECK(blended_loss_db(0.0, 100.0, 120.0) == 120.0);
  CHECK(blended_loss_db(0.25, 100.0, 120.0) == Approx(115.0));
  CHECK(expected_gain_linear(0.0) == 1.0);
  CHECK(expected_gain_linear(30.0) == Approx(1e-3).epsilon(1e-14));
  CHECK(expected_gain_linear(124.946249019233) == Approx(3.2016591736526e-13).epsilon(1e-11));
}
