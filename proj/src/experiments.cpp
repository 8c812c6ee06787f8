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

#include "flmarket/experiments.hpp"

#include <chrono>
#include <cmath>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "flmarket/rng.hpp"
#include "flmarket/wdp.hpp"
#include "parallel.hpp"

namespace flmarket {

namespace {

GenParams params_for(const GenParams& base, const SizeSpec& size, std::uint64_t seed) {
  GenParams p = base;
  p.buyers = size.buyers;
  p.data_sellers = size.data_sellers;
  p.uav_sellers = size.uav_sellers;
  p.seed = seed;
  return p;
}

MethodConfig method_config(const FogaConfig& foga, std::uint64_t seed) {
  MethodConfig c;
  c.foga = foga;
  c.foga.seed = mix_seed(seed, 1);
  c.rsbm_seed = mix_seed(seed, 2);
  return c;
}

}  // namespace

std::vector<SizeSpec> parse_sizes(const std::string& text) {
  std::vector<SizeSpec> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    GenParams p;
    parse_size(item, p);
    out.push_back({p.buyers, p.data_sellers, p.uav_sellers});
  }
  if (out.empty() || text.back() == ',') throw std::invalid_argument("bad size list: '" + text + "'");
  return out;
}

std::uint64_t trial_seed(std::uint64_t base, std::size_t size_index, std::size_t trial) {
  return mix_seed(mix_seed(base, size_index), trial);
}

bool within_cap(const SizeSpec& size, const SizeSpec& cap) {
  return size.buyers <= cap.buyers && size.data_sellers <= cap.data_sellers &&
         size.uav_sellers <= cap.uav_sellers;
}

ComparisonReport run_compare(const CompareConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("compare: trials must be >= 1");
  ComparisonReport report;
  report.config = config;
  constexpr std::size_t kMethods = std::size(kAllMethods);

  for (std::size_t si = 0; si < config.sizes.size(); ++si) {
    const SizeSpec& size = config.sizes[si];
    const bool run_vcg = within_cap(size, config.vcg_cap);
    std::vector<TrialRecord> records(config.trials * kMethods);

    detail::parallel_for(config.trials, config.threads, [&](std::size_t trial) {
      const std::uint64_t seed = trial_seed(config.params.seed, si, trial);
      const MarketBids bids = build_joint_bids(generate(params_for(config.params, size, seed)));
      const MethodConfig mc = method_config(config.foga, seed);
      for (std::size_t k = 0; k < kMethods; ++k) {
        const Method method = kAllMethods[k];
        TrialRecord& r = records[trial * kMethods + k];
        r.size = size.label();
        r.trial = trial;
        r.seed = seed;
        r.method = method_name(method);
        if (method == Method::kVcg && !run_vcg) continue;
        const AuctionOutcome o = run_method(method, bids, mc);
        r.objective = o.objective;
        r.runtime_s = o.elapsed.count();
      }
    });

    for (std::size_t k = 0; k < kMethods; ++k) {
      MethodSummary row;
      row.size = size.label();
      row.method = method_name(kAllMethods[k]);
      double wins = 0.0, gaps = 0.0, obj = 0.0, time = 0.0;
      for (std::size_t trial = 0; trial < config.trials; ++trial) {
        const TrialRecord& r = records[trial * kMethods + k];
        if (!r.objective) continue;
        ++row.trials;
        obj += *r.objective;
        time += r.runtime_s;
        if (run_vcg) {
          const double exact = *records[trial * kMethods].objective;
          if (*r.objective >= exact - 1e-9) wins += 1.0;
          if (exact > 0.0) gaps += (exact - *r.objective) / exact;
        }
      }
      if (row.trials > 0) {
        row.mean_objective = obj / static_cast<double>(row.trials);
        row.mean_runtime_s = time / static_cast<double>(row.trials);
        if (run_vcg) {
          row.win_rate = wins / static_cast<double>(row.trials);
          row.mean_gap = gaps / static_cast<double>(row.trials);
        }
      }
      report.rows.push_back(row);
    }
    for (auto& r : records) report.records.push_back(std::move(r));
  }
  return report;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (std::size_t si = 0; si < config.sizes.size(); ++si) {
    const SizeSpec& size = config.sizes[si];
    std::vector<MarketBids> markets;
    for (std::size_t trial = 0; trial < config.trials; ++trial) {
      const std::uint64_t seed = trial_seed(config.params.seed, si, trial);
      markets.push_back(build_joint_bids(generate(params_for(config.params, size, seed))));
    }
    for (Method method : kAllMethods) {
      BenchRow row;
      row.size = size.label();
      row.method = method_name(method);
      row.status = "ok";
      const bool exact = method == Method::kVcg;
      if (exact && (!within_cap(size, config.vcg_cap) || size.data_sellers > kMaxExactSellers ||
                    size.uav_sellers > kMaxExactSellers)) {
        row.status = "skipped";
        rows.push_back(row);
        continue;
      }
      std::vector<double> times;
      double total = 0.0;
      for (std::size_t trial = 0; trial < config.trials; ++trial) {
        const MethodConfig mc = method_config(config.foga, trial_seed(config.params.seed, si, trial));
        const auto start = std::chrono::steady_clock::now();
        const AuctionOutcome o = run_method(method, markets[trial], mc);
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        times.push_back(dt.count());
        total += dt.count();
        if (exact && total > config.vcg_timeout_s) {
          row.status = "timeout";
          break;
        }
      }
      row.trials = times.size();
      if (!times.empty()) {
        row.mean_s = total / static_cast<double>(times.size());
        double var = 0.0;
        for (double t : times) var += (t - row.mean_s) * (t - row.mean_s);
        row.std_s = times.size() > 1 ? std::sqrt(var / static_cast<double>(times.size() - 1)) : 0.0;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace flmarket
