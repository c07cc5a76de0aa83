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

#ifndef HAPSNET_PLACEMENT_HPP_
#define HAPSNET_PLACEMENT_HPP_

#include <span>
#include <vector>

#include "config.hpp"
#include "geometry.hpp"

namespace hapsnet {

// Cell centers of a grid x grid partition of the simulation area.
std::vector<Vec2> candidate_grid(const SimConfig& config, int grid);

// Greedy max-min placement: each new UAV takes the remaining candidate whose
// distance to the nearest already-placed ABS (HAPSs first) is largest. Ties
// go to the lowest candidate index. Throws ConfigError if the candidates run
// out.
std::vector<Vec2> initialize_uav_positions(std::vector<Vec2> candidates,
                                           std::span<const Vec2> haps_positions,
                                           int n_uavs);

}  // namespace hapsnet

#endif  // HAPSNET_PLACEMENT_HPP_
