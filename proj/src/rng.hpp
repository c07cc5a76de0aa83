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

#ifndef HAPSNET_RNG_HPP_
#define HAPSNET_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>

namespace hapsnet {

using Rng = std::mt19937_64;

// Derives independent, named random streams from one master seed so each
// stochastic concern (mobility, shadowing, per-agent exploration, ...) draws
// from its own sequence. Adding draws to one stream never shifts another.
class RngStreams {
 public:
  explicit RngStreams(std::uint64_t master_seed) : master_(master_seed) {}

  Rng stream(std::string_view name, std::uint64_t index = 0) const;
  std::uint64_t master_seed() const { return master_; }

 private:
  std::uint64_t master_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Uniform double in [0, 1). Uses the top 53 bits so results do not depend on
// the standard library's distribution implementation.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

// Uniform integer in [0, n). Rejection sampling, n > 0.
std::uint64_t uniform_index(Rng& rng, std::uint64_t n);

double standard_normal(Rng& rng);

}  // namespace hapsnet

#endif  // HAPSNET_RNG_HPP_
