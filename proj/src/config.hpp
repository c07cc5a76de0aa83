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

#ifndef HAPSNET_CONFIG_HPP_
#define HAPSNET_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace hapsnet {

enum class LosMode { kBlend, kBernoulli };
enum class TauMode { kGreedy, kEveryStep };

// Every tunable of a simulation run. Defaults reproduce the reference
// system-level parameter table, so a default-constructed config is the
// full-scale setup.
struct SimConfig {
  // World.
  double x_min = 0.0;
  double x_max = 1000.0;
  double y_min = 0.0;
  double y_max = 1000.0;
  double h_min = 22.5;
  double h_max = 150.0;
  double haps_height = 20000.0;
  double user_height = 1.5;
  int n_uavs = 5;
  int n_haps = 1;
  int n_users = 200;
  double slot_duration = 1.0;  // seconds
  int n_slots = 5740;
  int n_episodes = 20;
  double v_uav = 10.0;
  double v_ue_min = 0.0;
  double v_ue_max = 1.3;
  double user_demand = 1.8e6;  // bits/s
  std::uint64_t rng_seed = 1;

  // Propagation.
  double f_haps_mhz = 2110.0;
  double f_uav_ghz = 28.0;
  double env_alpha = 0.1;
  double env_beta = 750.0;
  double env_xi = 8.0;
  double delta_los = 61.4;
  double delta_nlos = 61.4;
  double eta_los = 2.0;
  double eta_nlos = 3.0;
  double sigma_los = 5.8;
  double sigma_nlos = 8.7;
  bool shadowing = true;
  LosMode los_mode = LosMode::kBlend;

  // Radio resources.
  double noise_psd_dbm_hz = -174.0;
  double p_haps_dbm = 43.0;
  double p_uav_dbm = 24.0;
  int n_uav_channels = 4;
  int n_haps_channels = 1;
  double bw_uav = 56e6;
  double bw_haps = 14e6;
  int association_period = 1;

  // Load coupling.
  int n_fp = 500;
  double rho0 = 0.5;
  double fp_tol = 1e-9;

  // Reward weights.
  double phi = 0.5;
  double psi = 0.5;

  // Deep Q-learning.
  double gamma = 0.999;
  int batch_size = 128;
  int replay_capacity = 5000;
  int replay_min = 264;
  int target_update = 10;
  double eps_start = 0.9;
  double eps_end = 0.5;
  double eps_decay = 200.0;
  double learning_rate = 1e-4;
  double rmsprop_decay = 0.99;
  double rmsprop_eps = 1e-8;
  double huber_delta = 1.0;
  double dropout = 0.2;
  std::vector<int> hidden_layers = {256, 128, 64, 32};
  TauMode tau_mode = TauMode::kGreedy;

  // Tabular benchmark.
  double ql_alpha = 0.1;
  int ql_grid = 10;

  // Heuristic placement candidates: ql_grid-independent square grid.
  int candidate_grid = 10;

  // Harness.
  int log_every = 10;
  double tail_fraction = 0.2;

  double area_width() const { return x_max - x_min; }
  double area_depth() const { return y_max - y_min; }

  // Throws ConfigError when an invariant is broken.
  void validate() const;
};

enum class Scheme { kDqn, kDqnNoHaps, kQLearning, kQLearningNoHaps };

std::string_view scheme_name(Scheme s);
Scheme parse_scheme(std::string_view name);
bool scheme_uses_haps(Scheme s);
bool scheme_uses_dqn(Scheme s);

struct ExperimentPlan {
  std::vector<Scheme> schemes = {Scheme::kDqn};
  std::string sweep_var = "n_uavs";
  std::vector<double> sweep_values;  // empty: the config's own value
  std::vector<std::uint64_t> seeds = {1};
  std::filesystem::path out_dir = "out";
};

struct ParsedConfig {
  SimConfig sim;
  ExperimentPlan plan;
};

// Applies one `key = value` assignment. Throws ConfigError on unknown keys,
// malformed values and range violations (line is attached by the caller).
void apply_setting(ParsedConfig& cfg, std::string_view key, std::string_view value);

// Reads the current value of `key` in the same textual form apply_setting
// accepts.
std::string get_setting(const ParsedConfig& cfg, std::string_view key);

std::vector<std::string> setting_keys();

ParsedConfig parse_config_text(std::string_view text);
ParsedConfig parse_config(const std::filesystem::path& path);

std::vector<double> parse_number_list(std::string_view text);

}  // namespace hapsnet

#endif  // HAPSNET_CONFIG_HPP_
