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

#include "harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace hapsnet {
namespace {

std::string fmt_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string exact_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

double to_real(const std::string& s, std::size_t line_no) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw IoError("csv line " + std::to_string(line_no) + ": bad number '" + s + "'");
  }
  return v;
}

bool is_plan_key(const std::string& key) {
  return key == "schemes" || key == "sweep_var" || key == "sweep_values" || key == "seeds" ||
         key == "out_dir";
}

MetricRow slot_row(const SlotMetrics& m, Scheme scheme, std::uint64_t seed,
                   const std::string& var, double value) {
  MetricRow r;
  r.scheme = std::string(scheme_name(scheme));
  r.seed = static_cast<std::int64_t>(seed);
  r.sweep_value = value;
  r.episode = m.episode;
  r.slot = m.slot;
  r.fairness = m.fairness;
  r.mean_load = m.mean_load;
  r.outage_per_abs = m.outage_per_abs;
  r.mean_user_rate = m.mean_user_rate;
  r.mean_uav_reward = m.mean_uav_reward;
  r.objective = m.objective;
  r.sweep_var = var;
  r.haps_users = m.haps_users;
  r.row_type = kRowSlot;
  return r;
}

}  // namespace

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {
      "scheme",         "seed",           "sweep_value",     "episode",   "slot",
      "fairness",       "mean_load",      "outage_per_abs",  "mean_user_rate",
      "mean_uav_reward", "objective",     "sweep_var",       "haps_users", "row_type"};
  return cols;
}

std::string csv_header() {
  std::string out;
  for (const auto& c : csv_columns()) {
    if (!out.empty()) out += ',';
    out += c;
  }
  return out;
}

std::string format_csv_row(const MetricRow& r) {
  std::string out;
  out.reserve(160);
  out += r.scheme;
  out += ',' + std::to_string(r.seed);
  out += ',' + fmt_real(r.sweep_value);
  out += ',' + std::to_string(r.episode);
  out += ',' + std::to_string(r.slot);
  out += ',' + fmt_real(r.fairness);
  out += ',' + fmt_real(r.mean_load);
  out += ',' + fmt_real(r.outage_per_abs);
  out += ',' + fmt_real(r.mean_user_rate);
  out += ',' + fmt_real(r.mean_uav_reward);
  out += ',' + fmt_real(r.objective);
  out += ',' + r.sweep_var;
  out += ',' + fmt_real(r.haps_users);
  out += ',' + r.row_type;
  return out;
}

std::vector<MetricRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != csv_header()) {
    throw IoError("csv header does not match the metric row schema");
  }
  std::vector<MetricRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_commas(line);
    if (f.size() != csv_columns().size()) {
      throw IoError("csv line " + std::to_string(line_no) + ": expected " +
                    std::to_string(csv_columns().size()) + " fields");
    }
    MetricRow r;
    r.scheme = f[0];
    r.seed = static_cast<std::int64_t>(to_real(f[1], line_no));
    r.sweep_value = to_real(f[2], line_no);
    r.episode = static_cast<int>(to_real(f[3], line_no));
    r.slot = static_cast<int>(to_real(f[4], line_no));
    r.fairness = to_real(f[5], line_no);
    r.mean_load = to_real(f[6], line_no);
    r.outage_per_abs = to_real(f[7], line_no);
    r.mean_user_rate = to_real(f[8], line_no);
    r.mean_uav_reward = to_real(f[9], line_no);
    r.objective = to_real(f[10], line_no);
    r.sweep_var = f[11];
    r.haps_users = to_real(f[12], line_no);
    r.row_type = f[13];
    if (r.row_type != kRowSlot && r.row_type != kRowSummary) {
      throw IoError("csv line " + std::to_string(line_no) + ": unknown row_type '" +
                    r.row_type + "'");
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<MetricRow> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_csv(in);
}

TailStats tail_mean(const EpisodeLog& log, double fraction) {
  TailStats t;
  if (log.empty()) return t;
  const auto n = static_cast<std::size_t>(
      std::clamp(std::ceil(fraction * static_cast<double>(log.size())), 1.0,
                 static_cast<double>(log.size())));
  for (std::size_t i = log.size() - n; i < log.size(); ++i) {
    const SlotMetrics& m = log[i];
    t.fairness += m.fairness;
    t.mean_load += m.mean_load;
    t.outage_per_abs += m.outage_per_abs;
    t.mean_user_rate += m.mean_user_rate;
    t.mean_uav_reward += m.mean_uav_reward;
    t.objective += m.objective;
    t.haps_users += m.haps_users;
  }
  const double k = static_cast<double>(n);
  t.fairness /= k;
  t.mean_load /= k;
  t.outage_per_abs /= k;
  t.mean_user_rate /= k;
  t.mean_uav_reward /= k;
  t.objective /= k;
  t.haps_users /= k;
  return t;
}

SimConfig cell_config(const ParsedConfig& cfg, double sweep_value, std::uint64_t seed) {
  ParsedConfig cell = cfg;
  apply_setting(cell, cfg.plan.sweep_var, exact_number(sweep_value));
  cell.sim.rng_seed = seed;
  cell.sim.validate();
  return cell.sim;
}

CellResult run_cell(const ParsedConfig& cfg, Scheme scheme, double sweep_value,
                    std::uint64_t seed, const std::function<void(const MetricRow&)>& sink) {
  const SimConfig sim = cell_config(cfg, sweep_value, seed);
  Environment env(sim, scheme, seed);
  CellResult result{scheme, sweep_value, seed, {}};
  EpisodeLog last;
  for (int e = 0; e < sim.n_episodes; ++e) {
    EpisodeLog log = env.run_episode(sim.n_slots);
    if (sink) {
      for (const SlotMetrics& m : log) {
        if ((m.slot + 1) % sim.log_every == 0) {
          sink(slot_row(m, scheme, seed, cfg.plan.sweep_var, sweep_value));
        }
      }
    }
    last = std::move(log);
  }
  result.tail = tail_mean(last, sim.tail_fraction);
  return result;
}

SweepResult run_sweep(const ParsedConfig& cfg, const std::filesystem::path& csv_path,
                      const CellCallback& on_cell) {
  const ExperimentPlan& plan = cfg.plan;
  if (plan.schemes.empty()) throw ConfigError("plan has no schemes");
  if (plan.seeds.empty()) throw ConfigError("plan has no seeds");
  if (is_plan_key(plan.sweep_var)) {
    throw ConfigError("cannot sweep plan key '" + plan.sweep_var + "'");
  }
  std::vector<double> values = plan.sweep_values;
  if (values.empty()) {
    values.push_back(std::strtod(get_setting(cfg, plan.sweep_var).c_str(), nullptr));
  }
  // Reject bad values before touching the file system.
  for (double v : values) cell_config(cfg, v, plan.seeds.front());

  std::error_code ec;
  if (csv_path.has_parent_path()) std::filesystem::create_directories(csv_path.parent_path(), ec);
  std::ofstream out(csv_path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + csv_path.string());
  out << csv_header() << '\n';

  SweepResult result;
  result.csv_path = csv_path;
  auto sink = [&](const MetricRow& row) {
    out << format_csv_row(row) << '\n';
    ++result.rows_written;
  };

  for (Scheme scheme : plan.schemes) {
    for (double value : values) {
      std::vector<CellResult> cells;
      for (std::uint64_t seed : plan.seeds) {
        cells.push_back(run_cell(cfg, scheme, value, seed, sink));
        if (on_cell) on_cell(cells.back());
      }
      MetricRow s;
      s.scheme = std::string(scheme_name(scheme));
      s.seed = -1;
      s.sweep_value = value;
      s.episode = cfg.sim.n_episodes - 1;
      s.slot = -1;
      s.sweep_var = plan.sweep_var;
      s.row_type = kRowSummary;
      const double k = static_cast<double>(cells.size());
      for (const CellResult& c : cells) {
        s.fairness += c.tail.fairness / k;
        s.mean_load += c.tail.mean_load / k;
        s.outage_per_abs += c.tail.outage_per_abs / k;
        s.mean_user_rate += c.tail.mean_user_rate / k;
        s.mean_uav_reward += c.tail.mean_uav_reward / k;
        s.objective += c.tail.objective / k;
        s.haps_users += c.tail.haps_users / k;
      }
      sink(s);
      result.summaries.push_back(s);
      result.cells.insert(result.cells.end(), cells.begin(), cells.end());
    }
  }
  out.flush();
  if (!out) throw IoError("write failed for " + csv_path.string());
  return result;
}

}  // namespace hapsnet
