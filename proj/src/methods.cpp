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

#include "flmarket/methods.hpp"

#include <chrono>
#include <stdexcept>

#include "flmarket/vcg.hpp"

namespace flmarket {

std::string method_name(Method method) {
  switch (method) {
    case Method::kVcg: return "vcg";
    case Method::kMatching: return "matching";
    case Method::kHvpm: return "hvpm";
    case Method::kLcpm: return "lcpm";
    case Method::kRsbm: return "rsbm";
    case Method::kFoga: return "foga";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  for (Method m : kAllMethods) {
    if (method_name(m) == name) return m;
  }
  throw std::invalid_argument("unknown mechanism '" + name + "'");
}

AuctionOutcome run_method(Method method, const MarketBids& bids, const MethodConfig& config) {
  switch (method) {
    case Method::kVcg: return run_vcg(bids);
    case Method::kMatching: return run_matching(bids, config.matching);
    default: break;
  }
  const auto start = std::chrono::steady_clock::now();
  Allocation a;
  switch (method) {
    case Method::kHvpm: a = run_hvpm(bids); break;
    case Method::kLcpm: a = run_lcpm(bids); break;
    case Method::kRsbm: a = run_rsbm(bids, config.rsbm_seed); break;
    case Method::kFoga: a = run_foga(bids, config.foga); break;
    default: break;
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  return baseline_outcome(bids, method_name(method), std::move(a), elapsed);
}

Mechanism vcg_mechanism() {
  return {"vcg", [](const MarketBids& bids) { return run_vcg(bids); }};
}

Mechanism matching_mechanism(MatchingOptions options) {
  return {"matching",
          [options](const MarketBids& bids) { return run_matching(bids, options); }};
}

MarketBids true_cost_bids(const Scenario& scenario) {
  Scenario truthful = scenario;
  for (auto& d : truthful.data_sellers) d.sell_bids = d.true_costs;
  for (auto& u : truthful.uav_sellers) u.sell_bids = u.true_costs;
  return build_joint_bids(truthful);
}

}  // namespace flmarket
