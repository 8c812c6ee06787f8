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
#include <vector>

#include "flmarket/market.hpp"

namespace flmarket {

// One (data-seller, UAV-seller) pair offered to one buyer. The pair is the
// unit of allocation and payment; the data-seller and UAV-seller are the
// virtual instances of the physical sellers dedicated to this buyer.
struct SellerPairBid {
  std::size_t buyer_id = 0;
  std::size_t data_seller_id = 0;
  std::size_t uav_seller_id = 0;
  double data_bid = 0.0;   // q_{m,l}
  double uav_bid = 0.0;    // s_{n,m,l}
  double joint_bid = 0.0;  // data_bid + uav_bid
  double valuation = 0.0;  // v_{l,(m,n)}, 0 when infeasible
  bool feasible = false;   // data size of m for l meets the requirement of l

  // Buyer revenue if this pair trades at its joint bid.
  double surplus() const { return valuation - joint_bid; }

  bool operator==(const SellerPairBid&) const = default;
};

// All M x N seller pairs for one buyer.
class JointBidMatrix {
 public:
  JointBidMatrix() = default;
  JointBidMatrix(std::size_t buyer_id, std::size_t data_sellers,
                 std::size_t uav_sellers)
      : buyer_id_(buyer_id),
        rows_(data_sellers),
        cols_(uav_sellers),
        entries_(data_sellers * uav_sellers) {}

  std::size_t buyer_id() const { return buyer_id_; }
  std::size_t num_data_sellers() const { return rows_; }
  std::size_t num_uav_sellers() const { return cols_; }

  SellerPairBid& at(std::size_t m, std::size_t n) { return entries_[m * cols_ + n]; }
  const SellerPairBid& at(std::size_t m, std::size_t n) const {
    return entries_[m * cols_ + n];
  }

  // Row-major (m, n) order.
  const std::vector<SellerPairBid>& entries() const { return entries_; }

  bool operator==(const JointBidMatrix&) const = default;

 private:
  std::size_t buyer_id_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SellerPairBid> entries_;
};

// The bid view every mechanism consumes: one matrix per buyer, index l.
using MarketBids = std::vector<JointBidMatrix>;

MarketBids build_joint_bids(const Scenario& scenario);

// Copy of `bids` in which the single pair (l, m, n) reports the given
// component bids. Other pairs sharing m or n are untouched.
MarketBids with_pair_bid(const MarketBids& bids, std::size_t buyer,
                         std::size_t data_seller, std::size_t uav_seller,
                         double data_bid, double uav_bid);

}  // namespace flmarket
