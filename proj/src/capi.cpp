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

#include "hapsnet/hapsnet.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <memory>
#include <string>

#include "config.hpp"
#include "environment.hpp"
#include "errors.hpp"
#include "harness.hpp"
#include "selftest.hpp"

struct hapsnet_config {
  hapsnet::ParsedConfig parsed;
};

struct hapsnet_sim {
  std::unique_ptr<hapsnet::Environment> env;
};

namespace {

thread_local std::string g_last_error;

hapsnet_status fail(hapsnet_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs `body` and converts exceptions into status codes.
template <typename F>
hapsnet_status guarded(F&& body) {
  try {
    body();
    return HAPSNET_OK;
  } catch (const hapsnet::ConfigError& e) {
    return fail(HAPSNET_ERR_CONFIG, e.what());
  } catch (const hapsnet::IoError& e) {
    return fail(HAPSNET_ERR_IO, e.what());
  } catch (const hapsnet::ContractViolation& e) {
    return fail(HAPSNET_ERR_CONTRACT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(HAPSNET_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(HAPSNET_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(HAPSNET_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HAPSNET_ERR_INTERNAL, "unknown exception");
  }
}

hapsnet_status null_argument(const char* name) {
  return fail(HAPSNET_ERR_INVALID_ARGUMENT, std::string(name) + " must not be null");
}

struct CallbackAdapter {
  hapsnet_cell_callback fn;
  void* user;

  void operator()(const hapsnet::CellResult& c) const {
    if (!fn) return;
    const std::string scheme(hapsnet::scheme_name(c.scheme));
    const hapsnet_cell_summary s{scheme.c_str(),        c.sweep_value,
                                 c.seed,                c.tail.fairness,
                                 c.tail.mean_load,      c.tail.outage_per_abs,
                                 c.tail.mean_user_rate, c.tail.mean_uav_reward,
                                 c.tail.objective,      c.tail.haps_users};
    fn(&s, user);
  }
};

void copy_truncated(char* dst, std::size_t cap, const std::string& src) {
  const std::size_t n = std::min(cap - 1, src.size());
  std::memcpy(dst, src.data(), n);
  dst[n] = '\0';
}

}  // namespace

extern "C" {

const char* hapsnet_version(void) { return "0.1.0"; }

const char* hapsnet_last_error(void) { return g_last_error.c_str(); }

const char* hapsnet_status_string(hapsnet_status status) {
  switch (status) {
    case HAPSNET_OK: return "ok";
    case HAPSNET_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HAPSNET_ERR_CONFIG: return "configuration error";
    case HAPSNET_ERR_IO: return "i/o error";
    case HAPSNET_ERR_CONTRACT: return "contract violation";
    case HAPSNET_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case HAPSNET_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

hapsnet_status hapsnet_config_create(hapsnet_config** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new hapsnet_config{}; });
}

hapsnet_status hapsnet_config_load(const char* path, hapsnet_config** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new hapsnet_config{hapsnet::parse_config(path)}; });
}

hapsnet_status hapsnet_config_parse(const char* text, hapsnet_config** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new hapsnet_config{hapsnet::parse_config_text(text)}; });
}

void hapsnet_config_destroy(hapsnet_config* config) { delete config; }

hapsnet_status hapsnet_config_set(hapsnet_config* config, const char* key, const char* value) {
  if (!config) return null_argument("config");
  if (!key) return null_argument("key");
  if (!value) return null_argument("value");
  return guarded([&] {
    hapsnet::ParsedConfig updated = config->parsed;
    hapsnet::apply_setting(updated, key, value);
    updated.sim.validate();
    config->parsed = std::move(updated);
  });
}

hapsnet_status hapsnet_config_get(const hapsnet_config* config, const char* key, char* buffer,
                                  size_t buffer_size, size_t* needed) {
  if (!config) return null_argument("config");
  if (!key) return null_argument("key");
  std::string value;
  const hapsnet_status st =
      guarded([&] { value = hapsnet::get_setting(config->parsed, key); });
  if (st != HAPSNET_OK) return st;
  if (needed) *needed = value.size() + 1;
  if (!buffer || buffer_size < value.size() + 1) {
    return fail(HAPSNET_ERR_BUFFER_TOO_SMALL,
                "value of '" + std::string(key) + "' needs " + std::to_string(value.size() + 1) +
                    " bytes");
  }
  std::memcpy(buffer, value.c_str(), value.size() + 1);
  return HAPSNET_OK;
}

hapsnet_status hapsnet_run(const hapsnet_config* config, uint64_t seed, const char* csv_path,
                           hapsnet_cell_callback on_cell, void* user_data) {
  if (!config) return null_argument("config");
  if (!csv_path) return null_argument("csv_path");
  return guarded([&] {
    hapsnet::ParsedConfig single = config->parsed;
    single.plan.sweep_values.clear();
    single.plan.seeds = {seed};
    hapsnet::run_sweep(single, csv_path, CallbackAdapter{on_cell, user_data});
  });
}

hapsnet_status hapsnet_sweep(const hapsnet_config* config, const char* csv_path,
                             hapsnet_cell_callback on_cell, void* user_data) {
  if (!config) return null_argument("config");
  if (!csv_path) return null_argument("csv_path");
  return guarded([&] {
    hapsnet::run_sweep(config->parsed, csv_path, CallbackAdapter{on_cell, user_data});
  });
}

hapsnet_status hapsnet_sim_create(const hapsnet_config* config, const char* scheme,
                                  uint64_t seed, hapsnet_sim** out) {
  if (!config) return null_argument("config");
  if (!scheme) return null_argument("scheme");
  if (!out) return null_argument("out");
  return guarded([&] {
    auto env = std::make_unique<hapsnet::Environment>(config->parsed.sim,
                                                      hapsnet::parse_scheme(scheme), seed);
    *out = new hapsnet_sim{std::move(env)};
  });
}

void hapsnet_sim_destroy(hapsnet_sim* sim) { delete sim; }

hapsnet_status hapsnet_sim_begin_episode(hapsnet_sim* sim) {
  if (!sim) return null_argument("sim");
  return guarded([&] { sim->env->begin_episode(); });
}

hapsnet_status hapsnet_sim_step(hapsnet_sim* sim, hapsnet_slot_metrics* out) {
  if (!sim) return null_argument("sim");
  return guarded([&] {
    const hapsnet::SlotMetrics m = sim->env->step();
    if (!out) return;
    out->episode = m.episode;
    out->slot = m.slot;
    out->fairness = m.fairness;
    out->mean_load = m.mean_load;
    out->outage_per_abs = m.outage_per_abs;
    out->mean_user_rate = m.mean_user_rate;
    out->mean_uav_reward = m.mean_uav_reward;
    out->objective = m.objective;
    out->outage_total = m.outage_total;
    out->haps_users = m.haps_users;
    out->dropped = m.dropped;
    out->load_converged = m.load_converged ? 1 : 0;
  });
}

hapsnet_status hapsnet_sim_abs_count(const hapsnet_sim* sim, int* n_abs, int* n_haps) {
  if (!sim) return null_argument("sim");
  const hapsnet::SimConfig& c = sim->env->config();
  if (n_abs) *n_abs = c.n_haps + c.n_uavs;
  if (n_haps) *n_haps = c.n_haps;
  return HAPSNET_OK;
}

hapsnet_status hapsnet_sim_abs_state(const hapsnet_sim* sim, int id, double position[3],
                                     int* channel) {
  if (!sim) return null_argument("sim");
  const auto& abss = sim->env->scenario().abss;
  if (abss.empty()) {
    return fail(HAPSNET_ERR_CONTRACT, "no episode has started");
  }
  if (id < 0 || id >= static_cast<int>(abss.size())) {
    return fail(HAPSNET_ERR_INVALID_ARGUMENT, "abs id " + std::to_string(id) + " out of range");
  }
  const hapsnet::AbsState& a = abss[id];
  if (position) {
    position[0] = a.position.x;
    position[1] = a.position.y;
    position[2] = a.position.z;
  }
  if (channel) *channel = a.channel;
  return HAPSNET_OK;
}

hapsnet_status hapsnet_selftest(uint64_t seed, hapsnet_suite_result* results, size_t capacity,
                                size_t* count) {
  if (capacity > 0 && !results) return null_argument("results");
  return guarded([&] {
    const auto suites = hapsnet::run_selftest(seed);
    if (count) *count = suites.size();
    for (std::size_t i = 0; i < suites.size() && i < capacity; ++i) {
      copy_truncated(results[i].name, sizeof results[i].name, suites[i].name);
      copy_truncated(results[i].detail, sizeof results[i].detail, suites[i].detail);
      results[i].passed = suites[i].passed ? 1 : 0;
      results[i].seconds = suites[i].seconds;
    }
  });
}

}  // extern "C"
