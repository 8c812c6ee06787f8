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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "flmarket/allocation.hpp"
#include "flmarket/baselines.hpp"
#include "flmarket/matching.hpp"
#include "flmarket/pairing.hpp"

namespace flmarket {

enum class Method { kVcg, kMatching, kHvpm, kLcpm, kRsbm, kFoga };

inline constexpr Method kAllMethods[] = {Method::kVcg,  Method::kMatching, Method::kHvpm,
                                         Method::kLcpm, Method::kRsbm,     Method::kFoga};

std::string method_name(Method method);
// Throws std::invalid_argument for an unknown name.
Method parse_method(const std::string& name);

struct MethodConfig {
  MatchingOptions matching;
  FogaConfig foga;
  std::uint64_t rsbm_seed = 1;
};

// Runs one method end to end, elapsed time included.
AuctionOutcome run_method(Method method, const MarketBids& bids, const MethodConfig& config);

// A named mechanism as seen by the audits.
struct Mechanism {
  std::string name;
  std::function<AuctionOutcome(const MarketBids&)> run;
};

Mechanism vcg_mechanism();
Mechanism matching_mechanism(MatchingOptions options = {});

// Bid view at true costs (what the sellers would report truthfully).
MarketBids true_cost_bids(const Scenario& scenario);

}  // namespace flmarket
