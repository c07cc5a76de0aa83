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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.
//
//   hapsnet_acceptance --cli <path to hapsnet CLI> --work <scratch dir>

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "hapsnet/hapsnet.h"

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

// Desk-scale trend runs: full 200-user scenario, shortened learning.
constexpr const char* kTrendConfig =
    "n_users = 200\n"
    "n_episodes = 1\n"
    "n_slots = 2000\n";
const std::vector<std::uint64_t> kSeeds = {1, 2, 3};

int g_failures = 0;

void verdict(bool pass, const std::string& criterion, const std::string& detail) {
  std::printf("%s  %s: %s\n", pass ? "PASS" : "FAIL", criterion.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(const char* f, double a = 0, double b = 0, double c = 0, double d = 0) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Cell {
  std::string scheme;
  double value;
  std::uint64_t seed;
  double fairness, outage_per_abs, mean_user_rate, mean_uav_reward;
};

void collect(const hapsnet_cell_summary* c, void* user) {
  static_cast<std::vector<Cell>*>(user)->push_back(
      {c->scheme, c->sweep_value, c->seed, c->fairness, c->outage_per_abs, c->mean_user_rate,
       c->mean_uav_reward});
  std::fprintf(stderr, "  cell %s n=%g seed=%" PRIu64 " F=%.4f out/abs=%.3f rate=%.4g r=%.4f\n",
               c->scheme, c->sweep_value, c->seed, c->fairness, c->outage_per_abs,
               c->mean_user_rate, c->mean_uav_reward);
}

// Runs a sweep through the C API; returns false (after reporting) on error.
bool sweep(const std::string& extra, const fs::path& csv, std::vector<Cell>& cells,
           double& seconds) {
  hapsnet_config* cfg = nullptr;
  const std::string text = std::string(kTrendConfig) + extra;
  const auto t0 = Clock::now();
  hapsnet_status st = hapsnet_config_parse(text.c_str(), &cfg);
  if (st == HAPSNET_OK) st = hapsnet_sweep(cfg, csv.c_str(), collect, &cells);
  hapsnet_config_destroy(cfg);
  seconds = seconds_since(t0);
  if (st != HAPSNET_OK) {
    std::fprintf(stderr, "sweep failed: %s\n", hapsnet_last_error());
    return false;
  }
  return true;
}

double seed_mean(const std::vector<Cell>& cells, const std::string& scheme, double value,
                 double Cell::*field) {
  double sum = 0.0;
  int n = 0;
  for (const Cell& c : cells) {
    if (c.scheme == scheme && c.value == value) {
      sum += c.*field;
      ++n;
    }
  }
  return n ? sum / n : std::nan("");
}

const Cell* find(const std::vector<Cell>& cells, const std::string& scheme, double value,
                 std::uint64_t seed) {
  for (const Cell& c : cells) {
    if (c.scheme == scheme && c.value == value && c.seed == seed) return &c;
  }
  return nullptr;
}

void property_suites() {
  std::vector<hapsnet_suite_result> r(8);
  size_t count = 0;
  if (hapsnet_selftest(1, r.data(), r.size(), &count) != HAPSNET_OK || count < 5) {
    verdict(false, "property suites", hapsnet_last_error());
    return;
  }
  struct Row {
    const char* criterion;
    double limit_s;
  };
  const Row rows[] = {{"SIF axioms on 100 random instances, zero violations, < 1 min", 60},
                      {"fixed-point uniqueness on 50 instances within 1e-6, <= 500 iterations, < 1 min", 60},
                      {"MLP backprop vs central differences on 20 points, rel err < 1e-4, < 1 min", 60},
                      {"DQN greedy policy matches value iteration on >= 95% of 5x5 grid states, < 5 min", 300},
                      {"closed forms (epsilon, Huber, Jain bounds) exact to 1e-12", 60}};
  for (int i = 0; i < 5; ++i) {
    verdict(r[i].passed && r[i].seconds < rows[i].limit_s, rows[i].criterion,
            std::string(r[i].detail) + fmt("; %.1fs", r[i].seconds));
  }
}

void fairness_and_outage(const fs::path& work) {
  std::vector<Cell> cells;
  double secs = 0.0;
  const bool ok = sweep("schemes = DQN,QLearning\nsweep_var = n_uavs\nsweep_values = 1,3,5\n"
                        "seeds = 1,2,3\n",
                        work / "trend_uavs.csv", cells, secs);
  const char* fig4 = "fairness nondecreasing in n_uavs {1,3,5} for DQN (one inversion <= 0.01), < 30 min";
  const char* fig57 = "outage per ABS decreasing in n_uavs; DQN reward >= Q-learning at n_uavs >= 3 (seed majority), < 30 min";
  if (!ok) {
    verdict(false, fig4, "sweep failed");
    verdict(false, fig57, "sweep failed");
    return;
  }
  const double values[] = {1, 3, 5};

  double f[3];
  for (int i = 0; i < 3; ++i) f[i] = seed_mean(cells, "DQN", values[i], &Cell::fairness);
  int inversions = 0;
  bool small = true;
  for (int i = 0; i + 1 < 3; ++i) {
    if (f[i + 1] < f[i]) {
      ++inversions;
      small = small && f[i] - f[i + 1] <= 0.01;
    }
  }
  verdict(inversions == 0 || (inversions == 1 && small) ? secs < 1800 : false, fig4,
          fmt("F = %.4f, %.4f, %.4f", f[0], f[1], f[2]) + fmt("; %.0fs", secs));

  bool pass = secs < 1800;
  std::string detail;
  for (const char* scheme : {"DQN", "QLearning"}) {
    double o[3];
    for (int i = 0; i < 3; ++i) o[i] = seed_mean(cells, scheme, values[i], &Cell::outage_per_abs);
    const bool decreasing = o[1] < o[0] && o[2] < o[1];
    pass = pass && decreasing;
    detail += std::string(scheme) + fmt(" outage/ABS %.2f, %.2f, %.2f; ", o[0], o[1], o[2]);
  }
  for (double n : {3.0, 5.0}) {
    int wins = 0;
    for (std::uint64_t s : kSeeds) {
      const Cell* d = find(cells, "DQN", n, s);
      const Cell* q = find(cells, "QLearning", n, s);
      if (d && q && d->mean_uav_reward >= q->mean_uav_reward) ++wins;
    }
    pass = pass && 2 * wins > static_cast<int>(kSeeds.size());
    detail += fmt("n=%g: DQN reward %.4f vs QL %.4f, DQN wins %g/3; ", n,
                  seed_mean(cells, "DQN", n, &Cell::mean_uav_reward),
                  seed_mean(cells, "QLearning", n, &Cell::mean_uav_reward), wins);
  }
  verdict(pass, fig57, detail + fmt("%.0fs", secs));
}

void haps_rate_gain(const fs::path& work) {
  std::vector<Cell> cells;
  double secs = 0.0;
  const char* crit = "mean user rate DQN / DQN-NoHAPS > 1.2 at 2 UAVs, < 20 min";
  if (!sweep("schemes = DQN,DQN-NoHAPS\nsweep_var = n_uavs\nsweep_values = 2\nseeds = 1,2,3\n",
             work / "trend_haps.csv", cells, secs)) {
    verdict(false, crit, "sweep failed");
    return;
  }
  const double with = seed_mean(cells, "DQN", 2, &Cell::mean_user_rate);
  const double without = seed_mean(cells, "DQN-NoHAPS", 2, &Cell::mean_user_rate);
  const double ratio = with / without;
  verdict(ratio > 1.2 && secs < 1200, crit,
          fmt("%.4g vs %.4g bit/s, ratio %.3f; %.0fs", with, without, ratio, secs));
}

void determinism(const fs::path& work, const std::string& cli) {
  const char* crit = "two `run --seed 42` invocations write byte-identical CSV files";
  const fs::path cfg = work / "determinism.cfg";
  std::ofstream(cfg) << "n_slots = 320\nn_episodes = 1\nschemes = DQN,QLearning\n";
  std::string files[2];
  for (int i = 0; i < 2; ++i) {
    const fs::path out = work / ("determinism_" + std::to_string(i));
    fs::remove_all(out);
    const std::string cmd = "\"" + cli + "\" run --config \"" + cfg.string() +
                            "\" --seed 42 --quiet --out \"" + out.string() + "\" > /dev/null";
    if (std::system(cmd.c_str()) != 0) {
      verdict(false, crit, "CLI run failed");
      return;
    }
    std::ifstream in(out / "run_seed42.csv", std::ios::binary);
    files[i].assign(std::istreambuf_iterator<char>(in), {});
  }
  verdict(!files[0].empty() && files[0] == files[1], crit,
          fmt("%g bytes each", static_cast<double>(files[0].size())));
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  fs::path work = fs::temp_directory_path() / "hapsnet_acceptance";
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string key = argv[i];
    if (key == "--cli") cli = argv[i + 1];
    else if (key == "--work") work = argv[i + 1];
  }
  if (cli.empty()) {
    std::fprintf(stderr, "usage: %s --cli <hapsnet binary> [--work <dir>]\n", argv[0]);
    return 2;
  }
  fs::create_directories(work);

  property_suites();
  fairness_and_outage(work);
  haps_rate_gain(work);
  determinism(work, cli);

  std::printf("%s: %d failing criteria\n", g_failures ? "FAILED" : "ALL PASSED", g_failures);
  return g_failures ? 1 : 0;
}
