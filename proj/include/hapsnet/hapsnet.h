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

/* C interface to the hapsnet simulator.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching _destroy function. Every fallible call returns a hapsnet_status;
 * on failure hapsnet_last_error() describes the problem. The error text is
 * per thread and stays valid until the next failing call on that thread.
 */
#ifndef HAPSNET_HAPSNET_H_
#define HAPSNET_HAPSNET_H_

#include <stddef.h>
#include <stdint.h>

#if defined(HAPSNET_BUILDING_LIBRARY)
#define HAPSNET_API __attribute__((visibility("default")))
#else
#define HAPSNET_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hapsnet_status {
  HAPSNET_OK = 0,
  HAPSNET_ERR_INVALID_ARGUMENT = 1,
  HAPSNET_ERR_CONFIG = 2,
  HAPSNET_ERR_IO = 3,
  HAPSNET_ERR_CONTRACT = 4,
  HAPSNET_ERR_BUFFER_TOO_SMALL = 5,
  HAPSNET_ERR_INTERNAL = 6
} hapsnet_status;

typedef struct hapsnet_config hapsnet_config;
typedef struct hapsnet_sim hapsnet_sim;

typedef struct hapsnet_slot_metrics {
  int episode;
  int slot;
  double fairness;
  double mean_load;
  double outage_per_abs;
  double mean_user_rate; /* bits/s */
  double mean_uav_reward;
  double objective;
  int outage_total;
  int haps_users;
  int dropped;
  int load_converged;
} hapsnet_slot_metrics;

/* Tail-window averages of one (scheme, sweep value, seed) cell. */
typedef struct hapsnet_cell_summary {
  const char* scheme;
  double sweep_value;
  uint64_t seed;
  double fairness;
  double mean_load;
  double outage_per_abs;
  double mean_user_rate;
  double mean_uav_reward;
  double objective;
  double haps_users;
} hapsnet_cell_summary;

typedef void (*hapsnet_cell_callback)(const hapsnet_cell_summary* cell, void* user_data);

typedef struct hapsnet_suite_result {
  char name[64];
  int passed;
  double seconds;
  char detail[256];
} hapsnet_suite_result;

HAPSNET_API const char* hapsnet_version(void);
HAPSNET_API const char* hapsnet_last_error(void);
HAPSNET_API const char* hapsnet_status_string(hapsnet_status status);

/* Configuration. A fresh config holds the documented defaults. */
HAPSNET_API hapsnet_status hapsnet_config_create(hapsnet_config** out);
HAPSNET_API hapsnet_status hapsnet_config_load(const char* path, hapsnet_config** out);
HAPSNET_API hapsnet_status hapsnet_config_parse(const char* text, hapsnet_config** out);
HAPSNET_API void hapsnet_config_destroy(hapsnet_config* config);
HAPSNET_API hapsnet_status hapsnet_config_set(hapsnet_config* config, const char* key,
                                              const char* value);
/* Writes the value of `key` as a NUL-terminated string. `needed` (optional)
 * receives the required buffer size including the terminator. */
HAPSNET_API hapsnet_status hapsnet_config_get(const hapsnet_config* config, const char* key,
                                              char* buffer, size_t buffer_size, size_t* needed);

/* Runs every configured scheme on the config's own values with one seed and
 * writes the CSV to `csv_path`. */
HAPSNET_API hapsnet_status hapsnet_run(const hapsnet_config* config, uint64_t seed,
                                       const char* csv_path, hapsnet_cell_callback on_cell,
                                       void* user_data);
/* Runs the config's experiment plan (schemes x sweep values x seeds). */
HAPSNET_API hapsnet_status hapsnet_sweep(const hapsnet_config* config, const char* csv_path,
                                         hapsnet_cell_callback on_cell, void* user_data);

/* Step-wise access to one simulation cell. `scheme` is one of "DQN",
 * "DQN-NoHAPS", "QLearning", "QLearning-NoHAPS". */
HAPSNET_API hapsnet_status hapsnet_sim_create(const hapsnet_config* config, const char* scheme,
                                              uint64_t seed, hapsnet_sim** out);
HAPSNET_API void hapsnet_sim_destroy(hapsnet_sim* sim);
HAPSNET_API hapsnet_status hapsnet_sim_begin_episode(hapsnet_sim* sim);
HAPSNET_API hapsnet_status hapsnet_sim_step(hapsnet_sim* sim, hapsnet_slot_metrics* out);
HAPSNET_API hapsnet_status hapsnet_sim_abs_count(const hapsnet_sim* sim, int* n_abs, int* n_haps);
/* Position (x, y, z in meters) and channel of ABS `id`; HAPSs come first. */
HAPSNET_API hapsnet_status hapsnet_sim_abs_state(const hapsnet_sim* sim, int id,
                                                 double position[3], int* channel);

/* Property suites. Fills up to `capacity` results; `count` receives the
 * number of suites. Returns HAPSNET_OK even when a suite fails. */
HAPSNET_API hapsnet_status hapsnet_selftest(uint64_t seed, hapsnet_suite_result* results,
                                            size_t capacity, size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* HAPSNET_HAPSNET_H_ */
