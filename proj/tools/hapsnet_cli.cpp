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

// Command-line front end over the C API.
//
//   hapsnet run --config sim.cfg [--seed 42] [--out out]
//   hapsnet sweep --config sim.cfg --var n_uavs --values 1,2,3 [--seeds 1,2,3]
//   hapsnet selftest

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hapsnet/hapsnet.h"

namespace {

int report(hapsnet_status st) {
  std::fprintf(stderr, "error: %s: %s\n", hapsnet_status_string(st), hapsnet_last_error());
  return st == HAPSNET_ERR_IO ? 3 : 2;
}

void print_cell(const hapsnet_cell_summary* c, void*) {
  std::fprintf(stderr,
               "%s value=%g seed=%" PRIu64
               " fairness=%.4f load=%.4f outage/abs=%.3f rate=%.4g reward=%.4f\n",
               c->scheme, c->sweep_value, c->seed, c->fairness, c->mean_load, c->outage_per_abs,
               c->mean_user_rate, c->mean_uav_reward);
}

std::string config_value(const hapsnet_config* cfg, const char* key) {
  size_t needed = 0;
  hapsnet_config_get(cfg, key, nullptr, 0, &needed);
  std::string value(needed, '\0');
  if (hapsnet_config_get(cfg, key, value.data(), value.size(), nullptr) != HAPSNET_OK) return {};
  value.resize(needed - 1);
  return value;
}

struct ConfigHandle {
  hapsnet_config* ptr = nullptr;
  ~ConfigHandle() { hapsnet_config_destroy(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HAPS-UAV downlink simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string schemes;
  std::uint64_t seed = 1;
  bool quiet = false;

  auto* run = app.add_subcommand("run", "Run the configured scenario with one seed");
  run->add_option("--config", config_path, "Config file (key = value lines)")->required();
  run->add_option("--seed", seed, "Master seed");
  run->add_option("--out", out_dir, "Output directory (default: out_dir from the config)");
  run->add_option("--schemes", schemes, "Comma-separated schemes");
  run->add_flag("--quiet", quiet, "No per-cell progress on stderr");

  std::string var = "n_uavs";
  std::string values;
  std::string seeds;
  auto* sweep = app.add_subcommand("sweep", "Sweep one config key over several values");
  sweep->add_option("--config", config_path, "Config file (key = value lines)")->required();
  sweep->add_option("--var", var, "Config key to sweep");
  sweep->add_option("--values", values, "Comma-separated values")->required();
  sweep->add_option("--seeds", seeds, "Comma-separated seeds");
  sweep->add_option("--out", out_dir, "Output directory (default: out_dir from the config)");
  sweep->add_option("--schemes", schemes, "Comma-separated schemes");
  sweep->add_flag("--quiet", quiet, "No per-cell progress on stderr");

  std::uint64_t selftest_seed = 1;
  auto* selftest = app.add_subcommand("selftest", "Run the property suites");
  selftest->add_option("--seed", selftest_seed, "Seed for the random instances");

  CLI11_PARSE(app, argc, argv);

  if (selftest->parsed()) {
    std::vector<hapsnet_suite_result> results(16);
    size_t count = 0;
    const hapsnet_status st = hapsnet_selftest(selftest_seed, results.data(), results.size(), &count);
    if (st != HAPSNET_OK) return report(st);
    bool all = true;
    for (size_t i = 0; i < count && i < results.size(); ++i) {
      const auto& r = results[i];
      std::printf("%s %s (%s; %.1fs)\n", r.passed ? "PASS" : "FAIL", r.name, r.detail, r.seconds);
      all = all && r.passed;
    }
    return all ? 0 : 1;
  }

  ConfigHandle cfg;
  hapsnet_status st = hapsnet_config_load(config_path.c_str(), &cfg.ptr);
  if (st != HAPSNET_OK) return report(st);
  if (!schemes.empty() && (st = hapsnet_config_set(cfg.ptr, "schemes", schemes.c_str())) != HAPSNET_OK) {
    return report(st);
  }
  if (out_dir.empty()) out_dir = config_value(cfg.ptr, "out_dir");
  const hapsnet_cell_callback progress = quiet ? nullptr : print_cell;

  std::filesystem::path csv;
  if (run->parsed()) {
    csv = std::filesystem::path(out_dir) / ("run_seed" + std::to_string(seed) + ".csv");
    st = hapsnet_run(cfg.ptr, seed, csv.c_str(), progress, nullptr);
  } else {
    if ((st = hapsnet_config_set(cfg.ptr, "sweep_var", var.c_str())) != HAPSNET_OK ||
        (st = hapsnet_config_set(cfg.ptr, "sweep_values", values.c_str())) != HAPSNET_OK ||
        (!seeds.empty() && (st = hapsnet_config_set(cfg.ptr, "seeds", seeds.c_str())) != HAPSNET_OK)) {
      return report(st);
    }
    csv = std::filesystem::path(out_dir) / ("sweep_" + var + ".csv");
    st = hapsnet_sweep(cfg.ptr, csv.c_str(), progress, nullptr);
  }
  if (st != HAPSNET_OK) return report(st);
  std::printf("%s\n", csv.c_str());
  return 0;
}
