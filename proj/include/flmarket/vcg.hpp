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

#include <utility>

#include "flmarket/allocation.hpp"
#include "flmarket/pairing.hpp"

namespace flmarket {

// Clarke pivot payment to a winning pair: its marginal contribution to the
// optimum plus its joint bid. Throws ConsistencyError when f_excl exceeds
// f_star by more than 1e-9.
double vcg_pair_payment(double f_star, double f_excl, double joint_bid);

struct PaymentSplit {
  double data_share = 0.0;
  double uav_share = 0.0;
};

// Splits a pair's total payment in proportion to the two component bids.
// The UAV share is computed by subtraction so the shares sum to `total`.
// Throws DomainError unless data_bid + uav_bid > 0.
PaymentSplit split_payment(double total, double data_bid, double uav_bid);

// Builds the per-seller payment vectors of `schedule` from its pair totals.
void apply_splits(const MarketBids& bids, PaymentSchedule& schedule);

// Optimal reverse auction: exact winner determination, Clarke payments per
// winning pair, proportional split between its two sellers.
AuctionOutcome run_vcg(const MarketBids& bids);
AuctionOutcome run_vcg(const Scenario& scenario);

}  // namespace flmarket
