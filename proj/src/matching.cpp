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

#include "flmarket/matching.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <tuple>

#include "flmarket/vcg.hpp"

namespace flmarket {

namespace {

// Greedy walk over the auctioneer list. `skip` (may be null) is treated as
// absent. `on_pick` returns false to stop early.
template <typename OnPick>
void walk(const PreferenceLists& lists, const PreferenceEntry* skip,
          OnPick&& on_pick) {
  const std::size_t L = lists.buyers.size();
  std::vector<bool> buyer_used(L);
  std::vector<bool> data_used;
  std::vector<bool> uav_used;
  std::size_t unmatched = L;
  for (const auto& e : lists.auctioneer) {
    if (unmatched == 0) break;
    if (skip != nullptr && e == *skip) continue;
    if (e.data_seller >= data_used.size()) data_used.resize(e.data_seller + 1);
    if (e.uav_seller >= uav_used.size()) uav_used.resize(e.uav_seller + 1);
    if (buyer_used[e.buyer] || data_used[e.data_seller] || uav_used[e.uav_seller]) {
      continue;
    }
    buyer_used[e.buyer] = data_used[e.data_seller] = uav_used[e.uav_seller] = true;
    --unmatched;
    if (!on_pick(e)) break;
  }
}

}  // namespace

bool ranks_before(const PreferenceEntry& a, const PreferenceEntry& b) {
  if (a.value != b.value) return a.value > b.value;
  return std::tie(a.buyer, a.data_seller, a.uav_seller) <
         std::tie(b.buyer, b.data_seller, b.uav_seller);
}

PreferenceLists build_preference_lists(const MarketBids& bids) {
  PreferenceLists lists;
  lists.buyers.resize(bids.size());
  for (const auto& matrix : bids) {
    auto& own = lists.buyers[matrix.buyer_id()];
    for (const auto& e : matrix.entries()) {
      if (!e.feasible) continue;
      const double r = e.surplus();
      if (r < 0.0) continue;
      const PreferenceEntry entry{e.buyer_id, e.data_seller_id, e.uav_seller_id, r};
      own.push_back(entry);
      lists.auctioneer.push_back(entry);
    }
    std::sort(own.begin(), own.end(), ranks_before);
    own.push_back(PreferenceEntry::null_pair(matrix.buyer_id()));
  }
  std::sort(lists.auctioneer.begin(), lists.auctioneer.end(), ranks_before);
  return lists;
}

Allocation greedy_match(const PreferenceLists& lists) {
  Allocation out;
  walk(lists, nullptr, [&](const PreferenceEntry& e) {
    out.triples.push_back(e.triple());
    out.objective += e.value;
    return true;
  });
  std::sort(out.triples.begin(), out.triples.end());
  return out;
}

double critical_value(const std::vector<PreferenceEntry>& buyer_list,
                      const PreferenceEntry& winner) {
  const auto it = std::find(buyer_list.begin(), buyer_list.end(), winner);
  if (it == buyer_list.end() || it->is_null()) {
    throw std::invalid_argument("critical_value: winner not in buyer list");
  }
  const auto next = std::next(it);
  return next == buyer_list.end() ? 0.0 : next->value;
}

double threshold_critical_value(const PreferenceLists& lists,
                                const PreferenceEntry& winner) {
  double threshold = 0.0;
  walk(lists, &winner, [&](const PreferenceEntry& e) {
    if (e.buyer == winner.buyer || e.data_seller == winner.data_seller ||
        e.uav_seller == winner.uav_seller) {
      threshold = e.value;
      return false;
    }
    return true;
  });
  return threshold;
}

double matching_pair_payment(double valuation, double critical) {
  return valuation - critical;
}

AuctionOutcome run_matching(const MarketBids& bids, const MatchingOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  AuctionOutcome out;
  out.mechanism = "matching";
  const PreferenceLists lists = build_preference_lists(bids);
  out.allocation = greedy_match(lists);
  for (const auto& t : out.allocation.triples) {
    const auto& pair = bids[t.buyer].at(t.data_seller, t.uav_seller);
    const PreferenceEntry winner{t.buyer, t.data_seller, t.uav_seller, pair.surplus()};
    const double critical = options.rule == CriticalValueRule::kThreshold
                                ? threshold_critical_value(lists, winner)
                                : critical_value(lists.buyers[t.buyer], winner);
    out.payments.pair_totals[t] = matching_pair_payment(pair.valuation, critical);
  }
  apply_splits(bids, out.payments);
  finalize_outcome(bids, out);
  out.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

AuctionOutcome run_matching(const Scenario& scenario, const MatchingOptions& options) {
  return run_matching(build_joint_bids(scenario), options);
}

}  // namespace flmarket
