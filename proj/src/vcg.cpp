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

#include "flmarket/vcg.hpp"

#include <algorithm>
#include <chrono>

#include "flmarket/error.hpp"
#include "flmarket/wdp.hpp"

namespace flmarket {

double vcg_pair_payment(double f_star, double f_excl, double joint_bid) {
  if (f_star < f_excl - 1e-9) {
    throw ConsistencyError("vcg_pair_payment: counterfactual optimum exceeds optimum");
  }
  return std::max(f_star - f_excl, 0.0) + joint_bid;
}

PaymentSplit split_payment(double total, double data_bid, double uav_bid) {
  const double joint = data_bid + uav_bid;
  if (!(joint > 0.0)) throw DomainError("split_payment: joint bid must be > 0");
  PaymentSplit out;
  out.data_share = total * (data_bid / joint);
  out.uav_share = total - out.data_share;
  return out;
}

void apply_splits(const MarketBids& bids, PaymentSchedule& schedule) {
  const std::size_t M = bids.empty() ? 0 : bids[0].num_data_sellers();
  const std::size_t N = bids.empty() ? 0 : bids[0].num_uav_sellers();
  schedule.data_seller_payments.assign(M, 0.0);
  schedule.uav_seller_payments.assign(N, 0.0);
  for (const auto& [t, total] : schedule.pair_totals) {
    const auto& e = bids[t.buyer].at(t.data_seller, t.uav_seller);
    const PaymentSplit split = split_payment(total, e.data_bid, e.uav_bid);
    schedule.data_seller_payments[t.data_seller] = split.data_share;
    schedule.uav_seller_payments[t.uav_seller] = split.uav_share;
  }
}

AuctionOutcome run_vcg(const MarketBids& bids) {
  const auto start = std::chrono::steady_clock::now();
  AuctionOutcome out;
  out.mechanism = "vcg";
  out.allocation = solve_exact(bids);
  const double f_star = out.allocation.objective;
  for (const auto& t : out.allocation.triples) {
    const double f_excl =
        solve_exact_excluding(bids, t.data_seller, t.uav_seller).objective;
    const double joint = bids[t.buyer].at(t.data_seller, t.uav_seller).joint_bid;
    out.payments.pair_totals[t] = vcg_pair_payment(f_star, f_excl, joint);
  }
  apply_splits(bids, out.payments);
  finalize_outcome(bids, out);
  out.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

AuctionOutcome run_vcg(const Scenario& scenario) {
  return run_vcg(build_joint_bids(scenario));
}

}  // namespace flmarket
