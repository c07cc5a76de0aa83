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

#ifndef HAPSNET_LOAD_HPP_
#define HAPSNET_LOAD_HPP_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "radio.hpp"
#include "rng.hpp"

namespace hapsnet {

struct LoadVector {
  std::vector<double> rho;  // per ABS, in [0, 1]
  int iterations_used = 0;
  bool converged = false;
};

// One slot's load-coupling system. Dropped users carry kUnassociated in
// snap.association and contribute nothing.
struct LoadProblem {
  RadioSnapshot snap;
  std::span<const double> demand;  // per-user rate requirement, bits/s
};

// Share of ABS `b`'s resources user `k` needs at loads `rho`. Infinite when
// the user's rate is zero.
double user_load_contribution(const LoadProblem& problem, int user,
                              std::span<const double> rho);

// Uncapped load map f(rho): each ABS sums demand / rate over its users, the
// rates depending on rho through load-weighted co-channel interference.
std::vector<double> load_map(const LoadProblem& problem, std::span<const double> rho);

// Iterates rho <- min(f(rho), 1) from rho0 for at most n_fp steps or until the
// largest componentwise change drops below tol. iterations_used is the index
// of the iterate that was found to be a fixed point (or n_fp).
LoadVector solve_fixed_point(const LoadProblem& problem, std::span<const double> rho0,
                             int n_fp, double tol);

struct CapacityOutcome {
  std::vector<int> association;  // input association with dropped users removed
  std::vector<int> dropped;      // user ids, ascending
  LoadVector loads;              // re-solved loads of the reduced system
};

// Removes users from every ABS whose unconstrained load exceeds one, largest
// individual contribution first, until the remainder fits. Loads are then
// re-solved for the reduced association.
CapacityOutcome enforce_capacity(const LoadProblem& problem, const LoadVector& solved,
                                 int n_fp, double tol);

using LoadFunction = std::function<std::vector<double>(std::span<const double>)>;

struct SifReport {
  int checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Samples positivity, monotonicity and scalability of a load map. ABSs marked
// unoccupied are exempt from positivity and scalability (their map is
// identically zero). Monotonicity witnesses are built by lowering each sample
// coordinatewise by random amounts.
SifReport check_sif_properties(const LoadFunction& f, std::span<const std::vector<double>> samples,
                               std::span<const bool> occupied, Rng& rng,
                               std::span<const double> scale_factors = {});

}  // namespace hapsnet

#endif  // HAPSNET_LOAD_HPP_
