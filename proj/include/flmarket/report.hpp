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

// CSV and JSON emission for the command-line harness.
//
// CSV files may start with "# key: value" comment lines carrying the
// generation parameters; read_csv skips them and returns them separately.

#include <map>
#include <string>
#include <vector>

#include "flmarket/allocation.hpp"
#include "flmarket/audit.hpp"
#include "flmarket/experiments.hpp"
#include "flmarket/pairing.hpp"

namespace flmarket {

// Shortest decimal string that parses back to exactly `v`.
std::string format_real(double v);

struct CsvDocument {
  std::vector<std::pair<std::string, std::string>> comments;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Throws ParseError when a row's width differs from the header.
CsvDocument read_csv(const std::string& text);
std::string write_csv(const CsvDocument& doc);

// Column contract of the per-winner table.
inline const std::vector<std::string> kWinnerColumns = {
    "winning_pair", "uav_bid",     "do_bid",      "joint_bid",  "total_payment",
    "pair_revenue", "uav_payment", "uav_revenue", "do_payment", "do_revenue"};

// One row per winner; winning_pair is "l/m/n" with 1-based indices. Payment
// and seller revenue cells are empty for outcomes without payments.
CsvDocument winners_csv(const MarketBids& bids, const AuctionOutcome& outcome);

// Outcome dump; `with_timing` adds "elapsed_s" (non-deterministic).
std::string outcome_json(const MarketBids& bids, const AuctionOutcome& outcome,
                         bool with_timing);

// Compact JSON of every generation parameter. Multi-size reports pass
// with_size = false and list their sizes separately.
std::string gen_params_json(const GenParams& params, bool with_size = true);

inline const std::vector<std::string> kCompareColumns = {
    "size", "method", "trials", "mean_objective", "win_rate_vs_exact", "mean_relative_gap"};
inline const std::vector<std::string> kRecordColumns = {"size", "trial", "seed", "method",
                                                        "objective"};
inline const std::vector<std::string> kBenchColumns = {"size",   "method", "trials",
                                                       "mean_s", "std_s",  "status"};
inline const std::vector<std::string> kAuditColumns = {
    "kind",        "scenario_seed",    "mechanism",       "participant",
    "deviation",   "truthful_revenue", "deviated_revenue"};

// Summary rows per (size, method). `with_timing` appends mean_runtime_s.
CsvDocument compare_csv(const ComparisonReport& report, bool with_timing);
// Per-trial rows. `with_timing` appends runtime_s.
CsvDocument records_csv(const ComparisonReport& report, bool with_timing);
CsvDocument bench_csv(const std::vector<BenchRow>& rows, const BenchConfig& config);
// One row per violation; counts go to the comment lines.
CsvDocument audit_csv(const AuditReport& report, const AuditConfig& config);
std::string audit_json(const AuditReport& report, const AuditConfig& config);

}  // namespace flmarket
