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

#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "errors.hpp"

namespace hapsnet {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view text) {
  text = trim(text);
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ConfigError("expected a number, got '" + std::string(text) + "'");
  }
  return v;
}

long long parse_integer(std::string_view text) {
  text = trim(text);
  long long v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("expected an integer, got '" + std::string(text) + "'");
  }
  return v;
}

bool parse_bool(std::string_view text) {
  text = trim(text);
  if (text == "true" || text == "1" || text == "on" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "off" || text == "no") return false;
  throw ConfigError("expected a boolean, got '" + std::string(text) + "'");
}

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = text.find(',');
    auto item = trim(text.substr(0, comma));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Setting {
  std::function<void(ParsedConfig&, std::string_view)> set;
  std::function<std::string(const ParsedConfig&)> get;
};

using Registry = std::map<std::string, Setting, std::less<>>;

void range_check(std::string_view key, double v, double lo, double hi, bool lo_open,
                 bool hi_open) {
  const bool below = lo_open ? !(v > lo) : !(v >= lo);
  const bool above = hi_open ? !(v < hi) : !(v <= hi);
  if (below || above) {
    std::ostringstream os;
    os << key << " = " << v << " out of range " << (lo_open ? "(" : "[") << lo << ", "
       << hi << (hi_open ? ")" : "]");
    throw ConfigError(os.str());
  }
}

constexpr double kInf = HUGE_VAL;

void add_double(Registry& r, const char* key, double SimConfig::*field, double lo = -kInf,
                double hi = kInf, bool lo_open = false, bool hi_open = false) {
  r[key] = Setting{
      [=](ParsedConfig& c, std::string_view v) {
        const double x = parse_double(v);
        range_check(key, x, lo, hi, lo_open, hi_open);
        c.sim.*field = x;
      },
      [=](const ParsedConfig& c) { return format_double(c.sim.*field); }};
}

void add_int(Registry& r, const char* key, int SimConfig::*field, long long lo,
             long long hi = 1'000'000'000) {
  r[key] = Setting{
      [=](ParsedConfig& c, std::string_view v) {
        const long long x = parse_integer(v);
        range_check(key, static_cast<double>(x), static_cast<double>(lo),
                    static_cast<double>(hi), false, false);
        c.sim.*field = static_cast<int>(x);
      },
      [=](const ParsedConfig& c) { return std::to_string(c.sim.*field); }};
}

void add_bool(Registry& r, const char* key, bool SimConfig::*field) {
  r[key] = Setting{[=](ParsedConfig& c, std::string_view v) { c.sim.*field = parse_bool(v); },
                   [=](const ParsedConfig& c) {
                     return std::string(c.sim.*field ? "true" : "false");
                   }};
}

Registry build_registry() {
  Registry r;
  add_double(r, "x_min", &SimConfig::x_min);
  add_double(r, "x_max", &SimConfig::x_max);
  add_double(r, "y_min", &SimConfig::y_min);
  add_double(r, "y_max", &SimConfig::y_max);
  add_double(r, "h_min", &SimConfig::h_min, 0.0, kInf, true);
  add_double(r, "h_max", &SimConfig::h_max, 0.0, kInf, true);
  add_double(r, "haps_height", &SimConfig::haps_height, 0.0, kInf, true);
  add_double(r, "user_height", &SimConfig::user_height, 0.0);
  add_int(r, "n_uavs", &SimConfig::n_uavs, 0);
  add_int(r, "n_haps", &SimConfig::n_haps, 0);
  add_int(r, "n_users", &SimConfig::n_users, 0);
  add_double(r, "slot_duration", &SimConfig::slot_duration, 0.0, kInf, true);
  add_int(r, "n_slots", &SimConfig::n_slots, 0);
  add_int(r, "n_episodes", &SimConfig::n_episodes, 0);
  add_double(r, "v_uav", &SimConfig::v_uav, 0.0);
  add_double(r, "v_ue_min", &SimConfig::v_ue_min, 0.0);
  add_double(r, "v_ue_max", &SimConfig::v_ue_max, 0.0);
  add_double(r, "user_demand", &SimConfig::user_demand, 0.0, kInf, true);
  r["rng_seed"] = Setting{
      [](ParsedConfig& c, std::string_view v) {
        const long long x = parse_integer(v);
        if (x < 0) throw ConfigError("rng_seed must be nonnegative");
        c.sim.rng_seed = static_cast<std::uint64_t>(x);
      },
      [](const ParsedConfig& c) { return std::to_string(c.sim.rng_seed); }};

  add_double(r, "f_haps_mhz", &SimConfig::f_haps_mhz, 0.0, kInf, true);
  add_double(r, "f_uav_ghz", &SimConfig::f_uav_ghz, 0.0, kInf, true);
  add_double(r, "env_alpha", &SimConfig::env_alpha, 0.0, 1.0);
  add_double(r, "env_beta", &SimConfig::env_beta, 0.0);
  add_double(r, "env_xi", &SimConfig::env_xi, 0.0, kInf, true);
  add_double(r, "delta_los", &SimConfig::delta_los);
  add_double(r, "delta_nlos", &SimConfig::delta_nlos);
  add_double(r, "eta_los", &SimConfig::eta_los, 0.0);
  add_double(r, "eta_nlos", &SimConfig::eta_nlos, 0.0);
  add_double(r, "sigma_los", &SimConfig::sigma_los, 0.0);
  add_double(r, "sigma_nlos", &SimConfig::sigma_nlos, 0.0);
  add_bool(r, "shadowing", &SimConfig::shadowing);
  r["los_mode"] = Setting{
      [](ParsedConfig& c, std::string_view v) {
        v = trim(v);
        if (v == "blend") {
          c.sim.los_mode = LosMode::kBlend;
        } else if (v == "bernoulli") {
          c.sim.los_mode = LosMode::kBernoulli;
        } else {
          throw ConfigError("los_mode must be 'blend' or 'bernoulli'");
        }
      },
      [](const ParsedConfig& c) {
        return std::string(c.sim.los_mode == LosMode::kBlend ? "blend" : "bernoulli");
      }};

  add_double(r, "noise_psd_dbm_hz", &SimConfig::noise_psd_dbm_hz);
  add_double(r, "p_haps_dbm", &SimConfig::p_haps_dbm);
  add_double(r, "p_uav_dbm", &SimConfig::p_uav_dbm);
  add_int(r, "n_uav_channels", &SimConfig::n_uav_channels, 1, 64);
  add_int(r, "n_haps_channels", &SimConfig::n_haps_channels, 1, 64);
  add_double(r, "bw_uav", &SimConfig::bw_uav, 0.0, kInf, true);
  add_double(r, "bw_haps", &SimConfig::bw_haps, 0.0, kInf, true);
  add_int(r, "association_period", &SimConfig::association_period, 1);

  add_int(r, "n_fp", &SimConfig::n_fp, 1);
  add_double(r, "rho0", &SimConfig::rho0, 0.0, 1.0, true);
  add_double(r, "fp_tol", &SimConfig::fp_tol, 0.0, 1.0, true);

  add_double(r, "phi", &SimConfig::phi, 0.0);
  add_double(r, "psi", &SimConfig::psi, 0.0);

  add_double(r, "gamma", &SimConfig::gamma, 0.0, 1.0);
  add_int(r, "batch_size", &SimConfig::batch_size, 1);
  add_int(r, "replay_capacity", &SimConfig::replay_capacity, 1);
  add_int(r, "replay_min", &SimConfig::replay_min, 1);
  add_int(r, "target_update", &SimConfig::target_update, 1);
  add_double(r, "eps_start", &SimConfig::eps_start, 0.0, 1.0);
  add_double(r, "eps_end", &SimConfig::eps_end, 0.0, 1.0);
  add_double(r, "eps_decay", &SimConfig::eps_decay, 0.0, kInf, true);
  add_double(r, "learning_rate", &SimConfig::learning_rate, 0.0, kInf, true);
  add_double(r, "rmsprop_decay", &SimConfig::rmsprop_decay, 0.0, 1.0, false, true);
  add_double(r, "rmsprop_eps", &SimConfig::rmsprop_eps, 0.0, kInf, true);
  add_double(r, "huber_delta", &SimConfig::huber_delta, 0.0, kInf, true);
  add_double(r, "dropout", &SimConfig::dropout, 0.0, 1.0, false, true);
  r["hidden_layers"] = Setting{
      [](ParsedConfig& c, std::string_view v) {
        std::vector<int> layers;
        for (auto item : split_list(v)) {
          const long long n = parse_integer(item);
          if (n < 1 || n > 65536) throw ConfigError("hidden layer width out of range");
          layers.push_back(static_cast<int>(n));
        }
        if (layers.empty()) throw ConfigError("hidden_layers must not be empty");
        c.sim.hidden_layers = std::move(layers);
      },
      [](const ParsedConfig& c) {
        std::string out;
        for (std::size_t i = 0; i < c.sim.hidden_layers.size(); ++i) {
          if (i) out += ',';
          out += std::to_string(c.sim.hidden_layers[i]);
        }
        return out;
      }};
  r["tau_mode"] = Setting{
      [](ParsedConfig& c, std::string_view v) {
        v = trim(v);
        if (v == "greedy") {
          c.sim.tau_mode = TauMode::kGreedy;
        } else if (v == "step") {
          c.sim.tau_mode = TauMode::kEveryStep;
        } else {
          throw ConfigError("tau_mode must be 'greedy' or 'step'");
        }
      },
      [](const ParsedConfig& c) {
        return std::string(c.sim.tau_mode == TauMode::kGreedy ? "greedy" : "step");
      }};

  add_double(r, "ql_alpha", &SimConfig::ql_alpha, 0.0, 1.0);
  add_int(r, "ql_grid", &SimConfig::ql_grid, 1, 1000);
  add_int(r, "candidate_grid", &SimConfig::candidate_grid, 1, 1000);
  add_int(r, "log_every", &SimConfig::log_every, 1);
  add_double(r, "tail_fraction", &SimConfig::tail_fraction, 0.0, 1.0, true);

  // Plan keys.
  r["schemes"] = Setting{
      [](ParsedConfig& c, std::string_view v) {
        std::vector<Scheme> schemes;
        for (auto item : split_list(v)) schemes.push_back(parse_scheme(item));
        if (schemes.empty()) throw ConfigError("schemes must not be empty");
        c.plan.schemes = std::move(schemes);
      },
      [](const ParsedConfig& c) {
        std::string out;
        for (std::size_t i = 0; i < c.plan.schemes.size(); ++i) {
          if (i) out += ',';
          out += scheme_name(c.plan.schemes[i]);
        }
        return out;
      }};
  r["sweep_var"] = Setting{[](ParsedConfig& c, std::string_view v) {
                             c.plan.sweep_var = std::string(trim(v));
                           },
                           [](const ParsedConfig& c) { return c.plan.sweep_var; }};
  r["sweep_values"] = Setting{
      [](ParsedConfig& c, std::string_view v) {
        // Empty means "sweep over the config's own value".
        c.plan.sweep_values.clear();
        if (!split_list(v).empty()) c.plan.sweep_values = parse_number_list(v);
      },
      [](const ParsedConfig& c) {
        std::string out;
        for (std::size_t i = 0; i < c.plan.sweep_values.size(); ++i) {
          if (i) out += ',';
          out += format_double(c.plan.sweep_values[i]);
        }
        return out;
      }};
  r["seeds"] = Setting{
      [](ParsedConfig& c, std::string_view v) {
        std::vector<std::uint64_t> seeds;
        for (auto item : split_list(v)) {
          const long long s = parse_integer(item);
          if (s < 0) throw ConfigError("seeds must be nonnegative");
          seeds.push_back(static_cast<std::uint64_t>(s));
        }
        if (seeds.empty()) throw ConfigError("seeds must not be empty");
        c.plan.seeds = std::move(seeds);
      },
      [](const ParsedConfig& c) {
        std::string out;
        for (std::size_t i = 0; i < c.plan.seeds.size(); ++i) {
          if (i) out += ',';
          out += std::to_string(c.plan.seeds[i]);
        }
        return out;
      }};
  r["out_dir"] = Setting{[](ParsedConfig& c, std::string_view v) {
                           c.plan.out_dir = std::string(trim(v));
                         },
                         [](const ParsedConfig& c) { return c.plan.out_dir.string(); }};
  return r;
}

const Registry& registry() {
  static const Registry r = build_registry();
  return r;
}

}  // namespace

void SimConfig::validate() const {
  if (!(x_min < x_max)) throw ConfigError("x_min must be < x_max");
  if (!(y_min < y_max)) throw ConfigError("y_min must be < y_max");
  if (!(0.0 < h_min && h_min < h_max && h_max < haps_height)) {
    throw ConfigError("require 0 < h_min < h_max < haps_height");
  }
  if (!(user_height < h_min)) throw ConfigError("user_height must be below h_min");
  if (!(slot_duration > 0.0)) throw ConfigError("slot_duration must be positive");
  if (!(v_ue_min <= v_ue_max)) throw ConfigError("v_ue_min must be <= v_ue_max");
  if (eta_nlos < eta_los) throw ConfigError("eta_nlos must be >= eta_los");
  if (eps_end > eps_start) throw ConfigError("eps_end must be <= eps_start");
  if (replay_min > replay_capacity) throw ConfigError("replay_min exceeds replay_capacity");
  if (batch_size > replay_min) throw ConfigError("batch_size exceeds replay_min");
  if (n_uavs + n_haps <= 0) throw ConfigError("scenario needs at least one ABS");
  if (n_users <= 0) throw ConfigError("scenario needs at least one user");
}

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::kDqn: return "DQN";
    case Scheme::kDqnNoHaps: return "DQN-NoHAPS";
    case Scheme::kQLearning: return "QLearning";
    case Scheme::kQLearningNoHaps: return "QLearning-NoHAPS";
  }
  return "?";
}

Scheme parse_scheme(std::string_view name) {
  name = trim(name);
  for (Scheme s : {Scheme::kDqn, Scheme::kDqnNoHaps, Scheme::kQLearning,
                   Scheme::kQLearningNoHaps}) {
    if (scheme_name(s) == name) return s;
  }
  throw ConfigError("unknown scheme '" + std::string(name) + "'");
}

bool scheme_uses_haps(Scheme s) {
  return s == Scheme::kDqn || s == Scheme::kQLearning;
}

bool scheme_uses_dqn(Scheme s) { return s == Scheme::kDqn || s == Scheme::kDqnNoHaps; }

void apply_setting(ParsedConfig& cfg, std::string_view key, std::string_view value) {
  const auto& r = registry();
  auto it = r.find(trim(key));
  if (it == r.end()) throw ConfigError("unknown key '" + std::string(trim(key)) + "'");
  it->second.set(cfg, value);
}

std::string get_setting(const ParsedConfig& cfg, std::string_view key) {
  const auto& r = registry();
  auto it = r.find(trim(key));
  if (it == r.end()) throw ConfigError("unknown key '" + std::string(trim(key)) + "'");
  return it->second.get(cfg);
}

std::vector<std::string> setting_keys() {
  std::vector<std::string> keys;
  for (const auto& [k, _] : registry()) keys.push_back(k);
  return keys;
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  for (auto item : split_list(text)) out.push_back(parse_double(item));
  if (out.empty()) throw ConfigError("expected a nonempty comma-separated list");
  return out;
}

ParsedConfig parse_config_text(std::string_view text) {
  ParsedConfig cfg;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("expected 'key = value'", line_no);
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("expected 'key = value'", line_no);
    }
    try {
      apply_setting(cfg, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(e.what(), line_no);
    }
  }
  cfg.sim.validate();
  return cfg;
}

ParsedConfig parse_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace hapsnet
