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
#include <limits>
#include <vector>

#include "flmarket/allocation.hpp"
#include "flmarket/pairing.hpp"

namespace flmarket {

// A buyer-seller triple ranked by its preference value v - J. The NULL
// sentinel closing a buyer's list has value 0 and no sellers.
struct PreferenceEntry {
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::size_t buyer = 0;
  std::size_t data_seller = kNone;
  std::size_t uav_seller = kNone;
  double value = 0.0;

  static PreferenceEntry null_pair(std::size_t buyer) { return {buyer, kNone, kNone, 0.0}; }
  bool is_null() const { return data_seller == kNone; }
  Triple triple() const { return {buyer, data_seller, uav_seller}; }

  bool operator==(const PreferenceEntry&) const = default;
};

// Strict weak order used by every list: value non-ascending, ties by
// ascending (buyer, data-seller, UAV-seller).
bool ranks_before(const PreferenceEntry& a, const PreferenceEntry& b);

struct PreferenceLists {
  std::vector<PreferenceEntry> auctioneer;           // all triples
  std::vector<std::vector<PreferenceEntry>> buyers;  // per buyer, NULL-terminated
};

// Feasible triples with value >= 0, sorted by ranks_before. Each buyer list
// ends with exactly one NULL sentinel.
PreferenceLists build_preference_lists(const MarketBids& bids);

// Walks the auctioneer list: the first remaining triple wins and every later
// triple sharing its buyer, data-seller or UAV-seller is discarded. Stops
// when the list is exhausted or every buyer is matched.
Allocation greedy_match(const PreferenceLists& lists);

// Value of the entry right behind `winner` in the buyer's own list (0 for
// the NULL sentinel). Throws std::invalid_argument if `winner` is absent.
double critical_value(const std::vector<PreferenceEntry>& buyer_list,
                      const PreferenceEntry& winner);

// Smallest preference value at which `winner` still wins the greedy walk:
// the value of the first triple that the walk without `winner` selects and
// that shares a participant with it, 0 if there is none.
double threshold_critical_value(const PreferenceLists& lists,
                                const PreferenceEntry& winner);

// Total payment to a winning pair: valuation minus critical value.
double matching_pair_payment(double valuation, double critical);

enum class CriticalValueRule {
  // threshold_critical_value
  kThreshold,
  // critical_value on the buyer's original list, regardless of whether the
  // successor is still available
  kListSuccessor,
};

struct MatchingOptions {
  CriticalValueRule rule = CriticalValueRule::kThreshold;
};

// One-sided matching reverse auction.
AuctionOutcome run_matching(const MarketBids& bids, const MatchingOptions& options = {});
AuctionOutcome run_matching(const Scenario& scenario, const MatchingOptions& options = {});

}  // namespace flmarket
