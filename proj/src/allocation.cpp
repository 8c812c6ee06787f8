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

#include "flmarket/allocation.hpp"

#include <algorithm>
#include <string>

#include "flmarket/error.hpp"

namespace flmarket {

namespace {

std::string describe(const Triple& t) {
  return "(" + std::to_string(t.buyer) + "," + std::to_string(t.data_seller) +
         "," + std::to_string(t.uav_seller) + ")";
}

}  // namespace

bool Allocation::contains(const Triple& t) const {
  return std::binary_search(triples.begin(), triples.end(), t);
}

void check_feasible(const MarketBids& bids, const Allocation& a) {
  if (!std::is_sorted(a.triples.begin(), a.triples.end())) {
    throw ConsistencyError("allocation triples are not sorted");
  }
  const std::size_t L = bids.size();
  const std::size_t M = L ? bids[0].num_data_sellers() : 0;
  const std::size_t N = L ? bids[0].num_uav_sellers() : 0;
  std::vector<bool> buyer_used(L), data_used(M), uav_used(N);
  for (const auto& t : a.triples) {
    if (t.buyer >= L || t.data_seller >= M || t.uav_seller >= N) {
      throw ConsistencyError("triple " + describe(t) + " out of range");
    }
    if (buyer_used[t.buyer] || data_used[t.data_seller] || uav_used[t.uav_seller]) {
      throw ConsistencyError("triple " + describe(t) + " reuses a participant");
    }
    buyer_used[t.buyer] = data_used[t.data_seller] = uav_used[t.uav_seller] = true;
    const auto& e = bids[t.buyer].at(t.data_seller, t.uav_seller);
    if (!e.feasible) {
      throw ConsistencyError("triple " + describe(t) + " violates the data requirement");
    }
    if (e.surplus() < 0.0) {
      throw ConsistencyError("triple " + describe(t) + " has negative surplus");
    }
  }
}

double objective_value(const MarketBids& bids, const Allocation& a) {
  check_feasible(bids, a);
  double total = 0.0;
  for (const auto& t : a.triples) {
    total += bids[t.buyer].at(t.data_seller, t.uav_seller).surplus();
  }
  return total;
}

double objective_value(const Scenario& s, const Allocation& a) {
  return objective_value(build_joint_bids(s), a);
}

Revenues participant_revenues(const MarketBids& bids, const Allocation& a,
                              const PaymentSchedule& payments) {
  const std::size_t L = bids.size();
  const std::size_t M = L ? bids[0].num_data_sellers() : 0;
  const std::size_t N = L ? bids[0].num_uav_sellers() : 0;
  Revenues r;
  r.buyers.assign(L, 0.0);
  r.data_sellers.assign(M, 0.0);
  r.uav_sellers.assign(N, 0.0);
  r.pairs.assign(a.triples.size(), 0.0);

  for (const auto& [t, total] : payments.pair_totals) {
    if (!a.contains(t)) {
      throw ConsistencyError("payment for non-winning triple " + describe(t));
    }
  }
  const bool paid = !payments.empty();
  if (paid && (payments.data_seller_payments.size() != M ||
               payments.uav_seller_payments.size() != N)) {
    throw ConsistencyError("payment vectors do not match market dimensions");
  }

  for (std::size_t i = 0; i < a.triples.size(); ++i) {
    const auto& t = a.triples[i];
    const auto& e = bids[t.buyer].at(t.data_seller, t.uav_seller);
    r.buyers[t.buyer] = e.valuation - e.joint_bid;
    if (!paid) continue;
    const auto it = payments.pair_totals.find(t);
    if (it == payments.pair_totals.end()) {
      throw ConsistencyError("winning triple " + describe(t) + " has no payment");
    }
    r.pairs[i] = it->second - e.joint_bid;
    r.data_sellers[t.data_seller] =
        payments.data_seller_payments[t.data_seller] - e.data_bid;
    r.uav_sellers[t.uav_seller] =
        payments.uav_seller_payments[t.uav_seller] - e.uav_bid;
  }
  return r;
}

Revenues participant_revenues(const Scenario& s, const Allocation& a,
                              const PaymentSchedule& payments) {
  return participant_revenues(build_joint_bids(s), a, payments);
}

void finalize_outcome(const MarketBids& bids, AuctionOutcome& o) {
  o.objective = objective_value(bids, o.allocation);
  o.allocation.objective = o.objective;
  Revenues r = participant_revenues(bids, o.allocation, o.payments);
  o.buyer_revenues = std::move(r.buyers);
  o.data_seller_revenues = std::move(r.data_sellers);
  o.uav_seller_revenues = std::move(r.uav_sellers);
  o.pair_revenues = std::move(r.pairs);
}

}  // namespace flmarket
