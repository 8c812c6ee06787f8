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
#include <optional>

#include "flmarket/allocation.hpp"
#include "flmarket/pairing.hpp"

namespace flmarket {

// Bitmask state bound of the exact solver.
inline constexpr std::size_t kMaxExactSellers = 20;
// Per-dimension bound of the exhaustive oracle.
inline constexpr std::size_t kMaxOracleDim = 5;

// Exact winner determination. Dynamic programming over buyers in index order
// with (used data-sellers, used UAV-sellers) bitmask states, pruned by an
// optimistic bound on the remaining buyers. Only triples with strictly
// positive surplus are selected. Among optimal allocations the
// lexicographically smallest sorted triple list is returned.
//
// Throws SizeError if M or N exceeds kMaxExactSellers.
Allocation solve_exact(const MarketBids& bids);

// Optimum of the market with the physical data-seller and UAV-seller removed
// (every pair that involves either of them).
Allocation solve_exact_excluding(const MarketBids& bids,
                                 std::size_t excluded_data_seller,
                                 std::size_t excluded_uav_seller);

// Exhaustive enumeration of every set of disjoint feasible triples. Test
// oracle only; throws SizeError if L, M or N exceeds kMaxOracleDim.
Allocation brute_force_oracle(const MarketBids& bids);

}  // namespace flmarket
