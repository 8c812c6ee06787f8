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

#include <chrono>
#include <cstdint>
#include <string>

#include "flmarket/allocation.hpp"
#include "flmarket/pairing.hpp"

namespace flmarket {

// Comparison heuristics. They determine winners only and carry no payment
// rule.

// Repeatedly takes the remaining feasible triple of highest valuation.
Allocation run_hvpm(const MarketBids& bids);

// Repeatedly takes the remaining feasible triple of lowest joint bid.
Allocation run_lcpm(const MarketBids& bids);

// Buyers in index order, each assigned a uniformly random remaining feasible
// pair (or left unmatched when none remains).
Allocation run_rsbm(const MarketBids& bids, std::uint64_t seed);

struct FogaConfig {
  std::size_t population_size = 50;
  std::size_t generations = 200;
  double crossover_rate = 0.9;
  double mutation_rate = 0.1;
  std::size_t fragment_passes = 2;
  std::uint64_t seed = 1;

  // Throws ValidationError.
  void validate() const;
};

// Genetic algorithm over per-buyer genes (a seller pair or none). Conflicting
// genes are repaired by dropping the lower-surplus gene; each generation the
// elite individual is improved by coordinate-wise ("fragmental") search over
// one buyer's gene at a time.
Allocation run_foga(const MarketBids& bids, const FogaConfig& config);

// Wraps a baseline allocation: buyer revenues filled, no payments.
AuctionOutcome baseline_outcome(const MarketBids& bids, std::string mechanism,
                                Allocation allocation,
                                std::chrono::duration<double> elapsed);

}  // namespace flmarket
