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

#include "selftest.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>

#include "channel.hpp"
#include "dqn/dqn_agent.hpp"
#include "dqn/mlp.hpp"
#include "metrics.hpp"

namespace hapsnet {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string printf_string(const char* fmt, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, a, b, c);
  return buf;
}

LoadFunction uncapped_map(const LoadProblem& problem) {
  return [problem](std::span<const double> rho) { return load_map(problem, rho); };
}

}  // namespace

LoadProblem RandomInstance::problem() const {
  return LoadProblem{RadioSnapshot{scenario.abss, &gains, association, plan}, demand};
}

std::vector<bool> RandomInstance::occupied() const {
  std::vector<bool> out(scenario.abss.size(), false);
  for (int b : association) {
    if (b != kUnassociated) out[b] = true;
  }
  return out;
}

RandomInstance make_random_instance(Rng& rng) {
  static constexpr std::array<int, 3> kChannelChoices = {1, 2, 4};
  RandomInstance inst;
  SimConfig& c = inst.config;
  c.n_haps = 1;
  c.n_uavs = 2 + static_cast<int>(uniform_index(rng, 5));
  c.n_users = 20 + static_cast<int>(uniform_index(rng, 181));
  c.n_uav_channels = kChannelChoices[uniform_index(rng, kChannelChoices.size())];
  c.validate();

  inst.scenario = spawn_scenario(c, rng);
  for (AbsState& u : inst.scenario.uavs()) {
    u.position.x = uniform(rng, c.x_min, c.x_max);
    u.position.y = uniform(rng, c.y_min, c.y_max);
    u.position.z = uniform(rng, c.h_min, c.h_max);
    u.channel = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(c.n_uav_channels)));
  }
  const PropagationParams prop = PropagationParams::from_config(c);
  Rng shadow(rng());
  Rng los(rng());
  const SlotFading fading = draw_slot_fading(c.n_uavs, c.n_users, prop, true, shadow, los);
  inst.gains = compute_gains(inst.scenario.abss, inst.scenario.users, c.n_haps, prop, c.los_mode,
                             fading);
  inst.association = associate_users(inst.scenario.abss, inst.gains);
  inst.demand.assign(c.n_users, c.user_demand);
  inst.plan = ChannelPlan::from_config(c);
  return inst;
}

SuiteResult sif_axiom_suite(int instances, std::uint64_t seed) {
  const auto t0 = Clock::now();
  SuiteResult r{"interference-function axioms", true, "", 0.0};
  Rng rng = RngStreams(seed).stream("selftest-sif");
  int checks = 0;
  std::size_t violations = 0;
  std::string first;
  for (int i = 0; i < instances; ++i) {
    const RandomInstance inst = make_random_instance(rng);
    const int n_abs = static_cast<int>(inst.scenario.abss.size());
    std::vector<std::vector<double>> samples(8, std::vector<double>(n_abs));
    for (auto& s : samples) {
      for (double& v : s) v = uniform01(rng);
    }
    const std::vector<bool> occ = inst.occupied();
    const auto occ_flags = std::make_unique<bool[]>(n_abs);
    std::copy(occ.begin(), occ.end(), occ_flags.get());
    const SifReport rep = check_sif_properties(uncapped_map(inst.problem()), samples,
                                               std::span<const bool>(occ_flags.get(), n_abs), rng);
    checks += rep.checks;
    violations += rep.violations.size();
    if (first.empty() && !rep.violations.empty()) first = rep.violations.front();
  }
  r.passed = violations == 0;
  r.detail = std::to_string(instances) + " instances, " + std::to_string(checks) + " checks, " +
             std::to_string(violations) + " violations";
  if (!first.empty()) r.detail += " (first: " + first + ")";
  r.seconds = seconds_since(t0);
  return r;
}

SuiteResult fixed_point_suite(int instances, std::uint64_t seed) {
  const auto t0 = Clock::now();
  SuiteResult r{"fixed-point uniqueness", true, "", 0.0};
  Rng rng = RngStreams(seed).stream("selftest-fixed-point");
  double worst_gap = 0.0;
  int worst_iters = 0;
  int failures = 0;
  for (int i = 0; i < instances; ++i) {
    const RandomInstance inst = make_random_instance(rng);
    const LoadProblem problem = inst.problem();
    const std::size_t n_abs = inst.scenario.abss.size();
    const std::vector<double> hi(n_abs, 0.5), lo(n_abs, 0.01);
    const LoadVector a = solve_fixed_point(problem, hi, 500, 1e-9);
    const LoadVector b = solve_fixed_point(problem, lo, 500, 1e-9);
    double gap = 0.0;
    for (std::size_t j = 0; j < n_abs; ++j) gap = std::max(gap, std::abs(a.rho[j] - b.rho[j]));
    worst_gap = std::max(worst_gap, gap);
    worst_iters = std::max({worst_iters, a.iterations_used, b.iterations_used});
    if (!a.converged || !b.converged || gap > 1e-6) ++failures;
  }
  r.passed = failures == 0 && worst_iters <= 500;
  r.detail = std::to_string(instances) + " instances, max gap " +
             printf_string("%.3g", worst_gap) + ", max iterations " +
             std::to_string(worst_iters) + ", failures " + std::to_string(failures);
  r.seconds = seconds_since(t0);
  return r;
}

SuiteResult gradient_suite(int points, std::uint64_t seed) {
  using dqn::QNetwork;
  const auto t0 = Clock::now();
  SuiteResult r{"mlp gradient check", true, "", 0.0};
  RngStreams streams(seed);
  Rng rng = streams.stream("selftest-gradient");
  const dqn::NetworkShape shape{4, {256, 128, 64, 32}, 7, 0.0};
  constexpr int kBatch = 4;
  constexpr int kCoordsPerTensor = 4;
  constexpr double kStep = 1e-6;
  double worst = 0.0;
  int coords = 0;
  for (int p = 0; p < points; ++p) {
    Rng init = streams.stream("selftest-gradient-init", static_cast<std::uint64_t>(p));
    QNetwork net(shape, init);
    // Move LayerNorm gains and biases off their initial values too.
    for (std::size_t t = 0; t < net.params().size(); ++t) {
      for (Eigen::Index i = 0; i < net.params()[t].size(); ++i) {
        net.params()[t].data()[i] += 0.1 * standard_normal(rng);
      }
    }
    Eigen::MatrixXd x(shape.input, kBatch), w(shape.output, kBatch);
    for (Eigen::Index i = 0; i < x.size(); ++i) x.data()[i] = uniform01(rng);
    for (Eigen::Index i = 0; i < w.size(); ++i) w.data()[i] = standard_normal(rng);
    auto loss = [&](const QNetwork& n) {
      return (n.forward(x, false, nullptr, nullptr).array() * w.array()).sum();
    };
    dqn::ForwardCache cache;
    net.forward(x, false, nullptr, &cache);
    const dqn::ParamList grads = net.backward(cache, w);
    for (std::size_t t = 0; t < net.params().size(); ++t) {
      Eigen::MatrixXd& m = net.params()[t];
      for (int c = 0; c < kCoordsPerTensor; ++c) {
        const auto i = static_cast<Eigen::Index>(uniform_index(rng, static_cast<std::uint64_t>(m.size())));
        const double saved = m.data()[i];
        m.data()[i] = saved + kStep;
        const double up = loss(net);
        m.data()[i] = saved - kStep;
        const double down = loss(net);
        m.data()[i] = saved;
        const double numeric = (up - down) / (2.0 * kStep);
        const double analytic = grads[t].data()[i];
        const double scale = std::max({std::abs(numeric), std::abs(analytic), 1e-6});
        worst = std::max(worst, std::abs(numeric - analytic) / scale);
        ++coords;
      }
    }
  }
  r.passed = worst < 1e-4;
  r.detail = std::to_string(points) + " points, " + std::to_string(coords) +
             " coordinates, max relative error " + printf_string("%.3g", worst);
  r.seconds = seconds_since(t0);
  return r;
}

namespace {

constexpr int kGrid = 5;
constexpr int kGoal = kGrid * kGrid - 1;
constexpr int kGridActions = 4;  // +y, -y, -x, +x

int grid_next(int s, int a) {
  int x = s % kGrid, y = s / kGrid;
  switch (a) {
    case 0: y = std::min(y + 1, kGrid - 1); break;
    case 1: y = std::max(y - 1, 0); break;
    case 2: x = std::max(x - 1, 0); break;
    default: x = std::min(x + 1, kGrid - 1); break;
  }
  return y * kGrid + x;
}

Eigen::VectorXd grid_state(int s) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(kGrid * kGrid);
  v(s) = 1.0;
  return v;
}

}  // namespace

std::vector<std::vector<int>> grid_optimal_actions(double gamma) {
  std::vector<double> v(kGrid * kGrid, 0.0);
  auto q = [&](int s, int a) {
    const int n = grid_next(s, a);
    return n == kGoal ? 1.0 : gamma * v[n];
  };
  for (int sweep = 0; sweep < 1000; ++sweep) {
    double change = 0.0;
    for (int s = 0; s < kGrid * kGrid; ++s) {
      if (s == kGoal) continue;
      double best = q(s, 0);
      for (int a = 1; a < kGridActions; ++a) best = std::max(best, q(s, a));
      change = std::max(change, std::abs(best - v[s]));
      v[s] = best;
    }
    if (change < 1e-14) break;
  }
  std::vector<std::vector<int>> out(kGrid * kGrid);
  for (int s = 0; s < kGrid * kGrid; ++s) {
    if (s == kGoal) continue;
    double best = q(s, 0);
    for (int a = 1; a < kGridActions; ++a) best = std::max(best, q(s, a));
    for (int a = 0; a < kGridActions; ++a) {
      if (q(s, a) >= best - 1e-9) out[s].push_back(a);
    }
  }
  return out;
}

SuiteResult grid_dqn_suite(std::uint64_t seed) {
  const auto t0 = Clock::now();
  SuiteResult r{"dqn grid oracle", true, "", 0.0};
  constexpr double kGamma = 0.9;
  constexpr int kSteps = 4000;
  constexpr int kMaxEpisodeLen = 30;

  dqn::DqnSettings s;
  s.shape = {kGrid * kGrid, {64, 64}, kGridActions, 0.0};
  s.train = {64, 264, kGamma, 1.0};
  s.replay_capacity = 5000;
  s.target_update = 50;
  s.learning_rate = 1e-3;
  s.epsilon = {1.0, 0.1, 500.0, 0};
  s.tau_mode = TauMode::kEveryStep;
  RngStreams streams(seed);
  dqn::DqnAgent agent(s, streams.stream("grid-init"), streams.stream("grid-explore"),
                      streams.stream("grid-replay"), streams.stream("grid-dropout"));
  Rng starts = streams.stream("grid-starts");

  int state = static_cast<int>(uniform_index(starts, kGoal));
  int episode_len = 0;
  for (int step = 0; step < kSteps; ++step) {
    const Eigen::VectorXd x = grid_state(state);
    const int a = agent.act(x);
    const int next = grid_next(state, a);
    const bool terminal = next == kGoal;
    agent.observe({x, a, terminal ? 1.0 : 0.0, grid_state(next), terminal});
    state = next;
    if (terminal || ++episode_len >= kMaxEpisodeLen) {
      state = static_cast<int>(uniform_index(starts, kGoal));
      episode_len = 0;
    }
  }

  const auto optimal = grid_optimal_actions(kGamma);
  int matches = 0;
  for (int st = 0; st < kGoal; ++st) {
    const int greedy = dqn::argmax(agent.policy().predict(grid_state(st)));
    if (std::find(optimal[st].begin(), optimal[st].end(), greedy) != optimal[st].end()) ++matches;
  }
  const double share = static_cast<double>(matches) / kGoal;
  r.passed = share >= 0.95;
  r.detail = std::to_string(matches) + "/" + std::to_string(kGoal) +
             " states match value iteration";
  r.seconds = seconds_since(t0);
  return r;
}

SuiteResult closed_form_suite() {
  const auto t0 = Clock::now();
  SuiteResult r{"closed-form checks", true, "", 0.0};
  constexpr double kTol = 1e-12;
  const dqn::EpsilonSchedule eps;
  const std::array<double, 5> one_hot = {0.0, 0.0, 7.0, 0.0, 0.0};
  const std::array<double, 4> equal = {3.0, 3.0, 3.0, 3.0};
  struct Check {
    const char* name;
    double got;
    double want;
  };
  const std::array<Check, 6> checks = {{
      {"eps(0)", eps.epsilon(0), 0.9},
      {"eps(200)", eps.epsilon(200), 0.5 + 0.4 / std::exp(1.0)},
      {"huber quadratic", dqn::huber_loss(1.0, 0.5, 1.0), 0.125},
      {"huber linear", dqn::huber_loss(2.0, 0.0, 1.0), 1.5},
      {"jain equal", jain_index(equal), 1.0},
      {"jain one-hot", jain_index(one_hot), 1.0 / 5.0},
  }};
  double worst = 0.0;
  for (const Check& c : checks) {
    const double err = std::abs(c.got - c.want);
    worst = std::max(worst, err);
    if (err > kTol) {
      r.passed = false;
      r.detail += std::string(c.name) + " off by " + printf_string("%.3g", err) + "; ";
    }
  }
  r.detail += std::to_string(checks.size()) + " checks, max error " + printf_string("%.3g", worst);
  r.seconds = seconds_since(t0);
  return r;
}

std::vector<SuiteResult> run_selftest(std::uint64_t seed) {
  return {sif_axiom_suite(100, seed), fixed_point_suite(50, seed), gradient_suite(20, seed),
          grid_dqn_suite(seed), closed_form_suite()};
}

}  // namespace hapsnet
