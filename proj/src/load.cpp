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

#include "load.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hapsnet {

double user_load_contribution(const LoadProblem& problem, int user,
                              std::span<const double> rho) {
  const double rate = user_rate(problem.snap, user, rho);
  if (!(rate > 0.0)) return std::numeric_limits<double>::infinity();
  return problem.demand[user] / rate;
}

std::vector<double> load_map(const LoadProblem& problem, std::span<const double> rho) {
  std::vector<double> f(problem.snap.abss.size(), 0.0);
  const auto& assoc = problem.snap.association;
  for (int k = 0; k < static_cast<int>(assoc.size()); ++k) {
    if (assoc[k] == kUnassociated) continue;
    f[assoc[k]] += user_load_contribution(problem, k, rho);
  }
  return f;
}

LoadVector solve_fixed_point(const LoadProblem& problem, std::span<const double> rho0,
                             int n_fp, double tol) {
  LoadVector out;
  out.rho.assign(rho0.begin(), rho0.end());
  for (int it = 1; it <= n_fp; ++it) {
    auto next = load_map(problem, out.rho);
    double change = 0.0;
    for (std::size_t b = 0; b < next.size(); ++b) {
      next[b] = std::min(next[b], 1.0);
      change = std::max(change, std::abs(next[b] - out.rho[b]));
    }
    out.rho = std::move(next);
    if (change < tol) {
      // rho^{it-1} already satisfied the fixed-point condition.
      out.iterations_used = std::max(it - 1, 1);
      out.converged = true;
      return out;
    }
    out.iterations_used = it;
  }
  return out;
}

CapacityOutcome enforce_capacity(const LoadProblem& problem, const LoadVector& solved,
                                 int n_fp, double tol) {
  CapacityOutcome out;
  out.association.assign(problem.snap.association.begin(), problem.snap.association.end());
  out.loads = solved;

  // Dropping users only lowers interference, so one pass normally suffices;
  // the loop guards against loads that land a rounding error above one.
  for (int round = 0; round < 8; ++round) {
    LoadProblem current = problem;
    current.snap.association = out.association;
    const std::size_t n_abs = problem.snap.abss.size();

    bool dropped_any = false;
    for (std::size_t b = 0; b < n_abs; ++b) {
      std::vector<std::pair<double, int>> contributions;
      double finite_total = 0.0;
      int n_infinite = 0;
      for (int k = 0; k < static_cast<int>(out.association.size()); ++k) {
        if (out.association[k] != static_cast<int>(b)) continue;
        const double c = user_load_contribution(current, k, out.loads.rho);
        contributions.emplace_back(c, k);
        if (std::isinf(c)) {
          ++n_infinite;
        } else {
          finite_total += c;
        }
      }
      auto overloaded = [&] { return n_infinite > 0 || finite_total > 1.0; };
      if (!overloaded()) continue;
      // Largest contribution first; equal contributions drop the lower id.
      std::sort(contributions.begin(), contributions.end(), [](const auto& x, const auto& y) {
        return x.first != y.first ? x.first > y.first : x.second < y.second;
      });
      for (const auto& [c, k] : contributions) {
        if (!overloaded()) break;
        out.association[k] = kUnassociated;
        out.dropped.push_back(k);
        if (std::isinf(c)) {
          --n_infinite;
        } else {
          finite_total -= c;
        }
        dropped_any = true;
      }
    }
    if (!dropped_any) break;

    LoadProblem reduced = problem;
    reduced.snap.association = out.association;
    out.loads = solve_fixed_point(reduced, out.loads.rho, n_fp, tol);
  }
  std::sort(out.dropped.begin(), out.dropped.end());
  return out;
}

SifReport check_sif_properties(const LoadFunction& f, std::span<const std::vector<double>> samples,
                               std::span<const bool> occupied, Rng& rng,
                               std::span<const double> scale_factors) {
  static constexpr double kDefaultScales[] = {1.5, 2.0, 4.0};
  if (scale_factors.empty()) scale_factors = kDefaultScales;

  SifReport report;
  auto witness = [](std::span<const double> v) {
    std::ostringstream os;
    os.precision(17);
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
  };

  for (const auto& n : samples) {
    const auto fn = f(n);
    for (std::size_t b = 0; b < fn.size(); ++b) {
      if (!occupied[b]) continue;
      ++report.checks;
      if (!(fn[b] > 0.0)) {
        report.violations.push_back("positivity: f_" + std::to_string(b) + " <= 0 at " +
                                    witness(n));
      }
    }

    std::vector<double> lower(n.size());
    for (std::size_t b = 0; b < n.size(); ++b) lower[b] = n[b] * uniform01(rng);
    const auto f_lower = f(lower);
    for (std::size_t b = 0; b < fn.size(); ++b) {
      ++report.checks;
      if (fn[b] < f_lower[b] * (1.0 - 1e-12)) {
        report.violations.push_back("monotonicity: f_" + std::to_string(b) + " decreased from " +
                                    witness(lower) + " to " + witness(n));
      }
    }

    for (double alpha : scale_factors) {
      std::vector<double> scaled(n.size());
      for (std::size_t b = 0; b < n.size(); ++b) scaled[b] = alpha * n[b];
      const auto f_scaled = f(scaled);
      for (std::size_t b = 0; b < fn.size(); ++b) {
        if (!occupied[b]) continue;
        ++report.checks;
        if (!(alpha * fn[b] > f_scaled[b])) {
          std::ostringstream os;
          os << "scalability: alpha=" << alpha << " f_" << b << " at " << witness(n);
          report.violations.push_back(os.str());
        }
      }
    }
  }
  return report;
}

}  // namespace hapsnet
