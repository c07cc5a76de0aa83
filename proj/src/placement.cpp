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

#include "placement.hpp"

#include <limits>

#include "errors.hpp"

namespace hapsnet {

std::vector<Vec2> candidate_grid(const SimConfig& config, int grid) {
  std::vector<Vec2> out;
  out.reserve(static_cast<std::size_t>(grid) * grid);
  const double dx = config.area_width() / grid;
  const double dy = config.area_depth() / grid;
  for (int j = 0; j < grid; ++j) {
    for (int i = 0; i < grid; ++i) {
      out.push_back({config.x_min + (i + 0.5) * dx, config.y_min + (j + 0.5) * dy});
    }
  }
  return out;
}

std::vector<Vec2> initialize_uav_positions(std::vector<Vec2> candidates,
                                           std::span<const Vec2> haps_positions,
                                           int n_uavs) {
  std::vector<Vec2> placed(haps_positions.begin(), haps_positions.end());
  std::vector<Vec2> uavs;
  uavs.reserve(n_uavs);
  for (int u = 0; u < n_uavs; ++u) {
    if (candidates.empty()) {
      throw ConfigError("ran out of candidate locations while placing UAVs");
    }
    std::size_t best = 0;
    double best_dist = -1.0;
    for (std::size_t l = 0; l < candidates.size(); ++l) {
      double nearest = std::numeric_limits<double>::infinity();
      for (const auto& b : placed) nearest = std::min(nearest, distance(candidates[l], b));
      if (nearest > best_dist) {
        best_dist = nearest;
        best = l;
      }
    }
    placed.push_back(candidates[best]);
    uavs.push_back(candidates[best]);
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return uavs;
}

}  // namespace hapsnet
