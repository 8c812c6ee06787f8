// Copyright 2026 The flmarket Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flmarket/methods.hpp"
#include "flmarket/scenario_gen.hpp"

namespace flmarket {

struct SizeSpec {
  std::size_t buyers = 0;
  std::size_t data_sellers = 0;
  std::size_t uav_sellers = 0;

  std::string label() const { return size_label(buyers, data_sellers, uav_sellers); }
  bool operator==(const SizeSpec&) const = default;
};

// Comma-separated "L/M/N" list.
std::vector<SizeSpec> parse_sizes(const std::string& text);

struct CompareConfig {
  std::vector<SizeSpec> sizes;
  std::size_t trials = 100;
  GenParams params;  // distributions; params.seed is the base seed
  FogaConfig foga;   // foga.seed is replaced per trial
  SizeSpec vcg_cap{6, 6, 6};
  std::size_t threads = 0;
};

struct TrialRecord {
  std::string size;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string method;
  std::optional<double> objective;  // empty when the method was skipped
  double runtime_s = 0.0;
};

struct MethodSummary {
  std::string size;
  std::string method;
  std::size_t trials = 0;
  double mean_objective = 0.0;
  double mean_runtime_s = 0.0;
  std::optional<double> win_rate;  // share of trials with F >= F(vcg) - 1e-9
  std::optional<double> mean_gap;  // mean of (F(vcg) - F) / F(vcg)
};

struct ComparisonReport {
  CompareConfig config;
  std::vector<MethodSummary> rows;
  std::vector<TrialRecord> records;  // sorted by (size, trial, method order)
};

// Seed of trial `trial` at size index `size_index`.
std::uint64_t trial_seed(std::uint64_t base, std::size_t size_index, std::size_t trial);

bool within_cap(const SizeSpec& size, const SizeSpec& cap);

ComparisonReport run_compare(const CompareConfig& config);

struct BenchConfig {
  std::vector<SizeSpec> sizes;
  std::size_t trials = 20;
  GenParams params;
  FogaConfig foga;
  SizeSpec vcg_cap{9, 9, 9};
  double vcg_timeout_s = 60.0;  // cumulative per size
};

struct BenchRow {
  std::string size;
  std::string method;
  std::size_t trials = 0;  // completed
  double mean_s = 0.0;
  double std_s = 0.0;
  std::string status;  // "ok", "timeout" or "skipped"
};

// Sequential wall-clock timing of every method.
std::vector<BenchRow> run_bench(const BenchConfig& config);

}  // namespace flmarket
