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
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "flmarket/pairing.hpp"

namespace flmarket {

struct Triple {
  std::size_t buyer = 0;
  std::size_t data_seller = 0;
  std::size_t uav_seller = 0;

  auto operator<=>(const Triple&) const = default;
};

// 0-1 winner determination result: disjoint (buyer, data-seller, UAV-seller)
// triples, sorted ascending.
struct Allocation {
  std::vector<Triple> triples;
  double objective = 0.0;

  bool contains(const Triple& t) const;
  bool operator==(const Allocation&) const = default;
};

// Throws ConsistencyError unless the allocation satisfies the assignment
// constraints: each buyer, data-seller and UAV-seller used at most once,
// every triple feasible with non-negative surplus, indices in range.
void check_feasible(const MarketBids& bids, const Allocation& allocation);

// Sum of (valuation - joint bid) over the triples. Throws ConsistencyError
// for an infeasible allocation.
double objective_value(const MarketBids& bids, const Allocation& allocation);
double objective_value(const Scenario& scenario, const Allocation& allocation);

struct PaymentSchedule {
  std::map<Triple, double> pair_totals;
  std::vector<double> data_seller_payments;  // size M, 0 for losers
  std::vector<double> uav_seller_payments;   // size N, 0 for losers

  bool empty() const { return pair_totals.empty(); }
  bool operator==(const PaymentSchedule&) const = default;
};

struct Revenues {
  std::vector<double> buyers;        // size L
  std::vector<double> data_sellers;  // size M
  std::vector<double> uav_sellers;   // size N
  std::vector<double> pairs;         // aligned with Allocation::triples
};

// Data-seller and UAV-seller revenue is payment minus own bid, pair revenue
// is total payment minus joint bid, buyer revenue is valuation minus joint
// bid. Losers get 0. An empty schedule yields zero seller and pair revenues
// (baseline outcomes). Throws ConsistencyError for a payment attached to a
// triple that did not win.
Revenues participant_revenues(const MarketBids& bids,
                              const Allocation& allocation,
                              const PaymentSchedule& payments);
Revenues participant_revenues(const Scenario& scenario,
                              const Allocation& allocation,
                              const PaymentSchedule& payments);

struct AuctionOutcome {
  std::string mechanism;
  Allocation allocation;
  PaymentSchedule payments;
  double objective = 0.0;
  std::vector<double> buyer_revenues;
  std::vector<double> data_seller_revenues;
  std::vector<double> uav_seller_revenues;
  std::vector<double> pair_revenues;
  std::chrono::duration<double> elapsed{0.0};
};

// Fills objective and revenue fields of `outcome` from its allocation and
// payments.
void finalize_outcome(const MarketBids& bids, AuctionOutcome& outcome);

}  // namespace flmarket
