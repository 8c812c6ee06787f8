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

#include "flmarket/pairing.hpp"

namespace flmarket {

MarketBids build_joint_bids(const Scenario& s) {
  const std::size_t M = s.num_data_sellers();
  const std::size_t N = s.num_uav_sellers();
  MarketBids out;
  out.reserve(s.num_buyers());
  for (const auto& buyer : s.buyers) {
    const std::size_t l = buyer.buyer_id;
    JointBidMatrix matrix(l, M, N);
    for (std::size_t m = 0; m < M; ++m) {
      const auto& ds = s.data_sellers[m];
      const bool feasible = ds.data_sizes[l] >= buyer.required_data;
      for (std::size_t n = 0; n < N; ++n) {
        auto& e = matrix.at(m, n);
        e.buyer_id = l;
        e.data_seller_id = m;
        e.uav_seller_id = n;
        e.data_bid = ds.sell_bids[l];
        e.uav_bid = s.uav_sellers[n].sell_bids.at(m, l);
        e.joint_bid = e.data_bid + e.uav_bid;
        e.feasible = feasible;
        e.valuation = feasible ? buyer.valuations.at(m, n) : 0.0;
      }
    }
    out.push_back(std::move(matrix));
  }
  return out;
}

MarketBids with_pair_bid(const MarketBids& bids, std::size_t buyer,
                         std::size_t data_seller, std::size_t uav_seller,
                         double data_bid, double uav_bid) {
  MarketBids out = bids;
  auto& e = out.at(buyer).at(data_seller, uav_seller);
  e.data_bid = data_bid;
  e.uav_bid = uav_bid;
  e.joint_bid = data_bid + uav_bid;
  return out;
}

}  // namespace flmarket
