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

#ifndef HAPSNET_HARNESS_HPP_
#define HAPSNET_HARNESS_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"
#include "environment.hpp"

namespace hapsnet {

inline constexpr const char* kRowSlot = "slot";
inline constexpr const char* kRowSummary = "summary";

// One CSV line. Summary rows carry seed = -1 and slot = -1.
struct MetricRow {
  std::string scheme;
  std::int64_t seed = 0;
  double sweep_value = 0.0;
  int episode = 0;
  int slot = 0;
  double fairness = 0.0;
  double mean_load = 0.0;
  double outage_per_abs = 0.0;
  double mean_user_rate = 0.0;
  double mean_uav_reward = 0.0;
  double objective = 0.0;
  std::string sweep_var;
  double haps_users = 0.0;
  std::string row_type = kRowSlot;
};

const std::vector<std::string>& csv_columns();
std::string csv_header();
std::string format_csv_row(const MetricRow& row);

// Reads a harness CSV back. Throws IoError on a header mismatch or a
// malformed line.
std::vector<MetricRow> read_csv(std::istream& in);
std::vector<MetricRow> read_csv(const std::filesystem::path& path);

struct TailStats {
  double fairness = 0.0;
  double mean_load = 0.0;
  double outage_per_abs = 0.0;
  double mean_user_rate = 0.0;
  double mean_uav_reward = 0.0;
  double objective = 0.0;
  double haps_users = 0.0;
};

// Mean over the last ceil(fraction * size) slots; zeros for an empty log.
TailStats tail_mean(const EpisodeLog& log, double fraction);

struct CellResult {
  Scheme scheme = Scheme::kDqn;
  double sweep_value = 0.0;
  std::uint64_t seed = 0;
  TailStats tail;
};

struct SweepResult {
  std::filesystem::path csv_path;
  std::vector<CellResult> cells;
  std::vector<MetricRow> summaries;
  std::size_t rows_written = 0;
};

using CellCallback = std::function<void(const CellResult&)>;

// Config for one cell: sweep variable applied, scheme constraints enforced.
SimConfig cell_config(const ParsedConfig& cfg, double sweep_value, std::uint64_t seed);

// Runs every configured episode of one cell, handing logged rows to `sink`.
CellResult run_cell(const ParsedConfig& cfg, Scheme scheme, double sweep_value,
                    std::uint64_t seed, const std::function<void(const MetricRow&)>& sink);

// Runs schemes x sweep values x seeds and writes `csv_path`. The file is
// opened (and parent directories created) before any simulation; failure
// raises IoError.
SweepResult run_sweep(const ParsedConfig& cfg, const std::filesystem::path& csv_path,
                      const CellCallback& on_cell = {});

}  // namespace hapsnet

#endif  // HAPSNET_HARNESS_HPP_
