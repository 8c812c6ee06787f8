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

#include <gtest/gtest.h>

#include <random>

#include "flmarket/baselines.hpp"
#include "flmarket/error.hpp"
#include "flmarket/matching.hpp"
#include "flmarket/methods.hpp"
#include "flmarket/scenario_gen.hpp"
#include "flmarket/vcg.hpp"
#include "flmarket/wdp.hpp"
#include "test_support.hpp"

namespace flmarket {
namespace {

using testing::make_bids;

// One buyer; (v, J) = (1,1)=(10,2), (1,2)=(10,3), (2,1)=(9,4), (2,2)=(9,5).
MarketBids worked_example() {
  return make_bids(1, 2, 2,
                   {{1, 1, 1, 10.0, 1.2, 0.8},
                    {1, 1, 2, 10.0, 1.5, 1.5},
                    {1, 2, 1, 9.0, 3.0, 1.0},
                    {1, 2, 2, 9.0, 2.5, 2.5}});
}

TEST(VcgPairPayment, Examples) {
  EXPECT_DOUBLE_EQ(vcg_pair_payment(8.0, 4.0, 2.0), 6.0);
  EXPECT_DOUBLE_EQ(vcg_pair_payment(5.0, 5.0, 1.25), 1.25);
  EXPECT_DOUBLE_EQ(vcg_pair_payment(10.0, 7.0, 4.5), 7.5);
  EXPECT_THROW(vcg_pair_payment(4.0, 4.1, 1.0), ConsistencyError);
}

TEST(SplitPayment, Examples) {
  const PaymentSplit row = split_payment(3.2562, 2.4433, 0.8124);
  EXPECT_NEAR(row.data_share, 2.4437, 1e-4);
  EXPECT_NEAR(row.uav_share, 0.8125, 1e-4);
  EXPECT_DOUBLE_EQ(row.data_share + row.uav_share, 3.2562);

  const PaymentSplit even = split_payment(5.0, 3.0, 2.0);
  EXPECT_DOUBLE_EQ(even.data_share, 3.0);
  EXPECT_DOUBLE_EQ(even.uav_share, 2.0);

  const PaymentSplit sym = split_payment(10.0, 2.5, 2.5);
  EXPECT_DOUBLE_EQ(sym.data_share, 5.0);
  EXPECT_DOUBLE_EQ(sym.uav_share, 5.0);

  EXPECT_THROW(split_payment(1.0, 0.0, 0.0), DomainError);
}

TEST(RunVcg, WorkedExample) {
  const AuctionOutcome o = run_vcg(worked_example());
  ASSERT_EQ(o.allocation.triples, (std::vector<Triple>{{0, 0, 0}}));
  EXPECT_DOUBLE_EQ(o.payments.pair_totals.at({0, 0, 0}), 6.0);
  EXPECT_DOUBLE_EQ(o.pair_revenues[0], 4.0);
  EXPECT_DOUBLE_EQ(o.objective, 8.0);
  EXPECT_DOUBLE_EQ(o.payments.data_seller_payments[1], 0.0);
  EXPECT_DOUBLE_EQ(o.payments.uav_seller_payments[1], 0.0);
  // Proportional shares of 6 against bids 1.2 and 0.8.
  EXPECT_NEAR(o.payments.data_seller_payments[0], 3.6, 1e-12);
  EXPECT_NEAR(o.payments.uav_seller_payments[0], 2.4, 1e-12);
}

TEST(RunVcg, OnlyPairIsPaidItsValuation) {
  const AuctionOutcome o = run_vcg(make_bids(1, 1, 1, {{1, 1, 1, 7.0, 2.0, 1.0}}));
  EXPECT_DOUBLE_EQ(o.payments.pair_totals.at({0, 0, 0}), 7.0);
  EXPECT_DOUBLE_EQ(o.pair_revenues[0], 4.0);
}

TEST(RunVcg, NoFeasiblePairs) {
  const AuctionOutcome o = run_vcg(make_bids(2, 2, 2, {}));
  EXPECT_TRUE(o.allocation.triples.empty());
  EXPECT_DOUBLE_EQ(o.objective, 0.0);
  EXPECT_EQ(o.payments.data_seller_payments, (std::vector<double>{0.0, 0.0}));
  EXPECT_EQ(o.payments.uav_seller_payments, (std::vector<double>{0.0, 0.0}));
}

// Payments recomputed from first principles on an independent optimum.
TEST(RunVcg, PaymentsMatchReferenceAndInvariantsHold) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 300; ++i) {
    const MarketBids bids = testing::random_bids(rng, 3, 3, 4);
    const AuctionOutcome o = run_vcg(bids);
    const double f_star = testing::reference_optimum(bids);
    ASSERT_NEAR(o.objective, f_star, 1e-9);
    double totals = 0.0, shares = 0.0;
    for (std::size_t k = 0; k < o.allocation.triples.size(); ++k) {
      const Triple& t = o.allocation.triples[k];
      const auto& e = bids[t.buyer].at(t.data_seller, t.uav_seller);
      MarketBids excl = bids;
      for (auto& mat : excl) {
        for (std::size_t m = 0; m < mat.num_data_sellers(); ++m) {
          for (std::size_t n = 0; n < mat.num_uav_sellers(); ++n) {
            if (m == t.data_seller || n == t.uav_seller) mat.at(m, n).feasible = false;
          }
        }
      }
      const double expected = f_star - testing::reference_optimum(excl) + e.joint_bid;
      const double paid = o.payments.pair_totals.at(t);
      ASSERT_NEAR(paid, expected, 1e-9);
      ASSERT_GE(paid, e.joint_bid - 1e-12);
      ASSERT_GE(o.pair_revenues[k], -1e-12);
      const double pd = o.payments.data_seller_payments[t.data_seller];
      const double pu = o.payments.uav_seller_payments[t.uav_seller];
      ASSERT_NEAR(pd + pu, paid, 1e-9);
      ASSERT_GE(pd, e.data_bid - 1e-12);
      ASSERT_GE(pu, e.uav_bid - 1e-12);
      totals += paid;
    }
    for (double x : o.payments.data_seller_payments) shares += x;
    for (double x : o.payments.uav_seller_payments) shares += x;
    ASSERT_NEAR(totals, shares, 1e-9);
    for (std::size_t m = 0; m < 3; ++m) {
      const bool won = std::any_of(o.allocation.triples.begin(), o.allocation.triples.end(),
                                   [&](const Triple& t) { return t.data_seller == m; });
      if (!won) ASSERT_EQ(o.payments.data_seller_payments[m], 0.0);
    }
  }
}

TEST(RunVcg, DominatesMatchingAndBaselines) {
  GenParams p;
  p.buyers = 4;
  p.data_sellers = 4;
  p.uav_sellers = 4;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    p.seed = seed;
    const MarketBids bids = build_joint_bids(generate(p));
    const double f = run_vcg(bids).objective;
    EXPECT_GE(f + 1e-9, run_matching(bids).objective);
    EXPECT_GE(f + 1e-9, objective_value(bids, run_hvpm(bids)));
    EXPECT_GE(f + 1e-9, objective_value(bids, run_lcpm(bids)));
    EXPECT_GE(f + 1e-9, objective_value(bids, run_rsbm(bids, seed)));
    FogaConfig c;
    c.generations = 20;
    c.seed = seed;
    EXPECT_GE(f + 1e-9, objective_value(bids, run_foga(bids, c)));
  }
}

// A winning pair that scales its joint bid never beats truthful revenue.
TEST(RunVcg, PairTruthfulOnGrid) {
  GenParams p;
  p.buyers = 3;
  p.data_sellers = 3;
  p.uav_sellers = 3;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    p.seed = seed;
    const MarketBids truth = build_joint_bids(generate(p));
    const AuctionOutcome base = run_vcg(truth);
    for (std::size_t k = 0; k < base.allocation.triples.size(); ++k) {
      const Triple t = base.allocation.triples[k];
      const auto& e = truth[t.buyer].at(t.data_seller, t.uav_seller);
      for (int g = 0; g < 21; ++g) {
        const double f = 0.2 + 0.14 * g;
        const MarketBids dev =
            with_pair_bid(truth, t.buyer, t.data_seller, t.uav_seller, e.data_bid * f, e.uav_bid * f);
        const AuctionOutcome o = run_vcg(dev);
        const auto it = o.payments.pair_totals.find(t);
        const double rev = it == o.payments.pair_totals.end() ? 0.0 : it->second - e.joint_bid;
        EXPECT_LE(rev, base.pair_revenues[k] + 1e-9) << "seed " << seed << " factor " << f;
      }
    }
  }
}

}  // namespace
}  // namespace flmarket
