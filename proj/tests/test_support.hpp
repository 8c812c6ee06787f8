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

// Hand-built bid markets and independent reference implementations used as
// oracles by the unit tests. Nothing here calls into the code under test
// beyond the plain data types.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <limits>
#include <random>
#include <vector>

#include "flmarket/allocation.hpp"
#include "flmarket/pairing.hpp"

namespace flmarket::testing {

// 1-based (l, m, n) with valuation and component bids.
struct PairSpec {
  std::size_t l, m, n;
  double v, q, s;
};

// Pairs not listed are infeasible with zero valuation.
inline MarketBids make_bids(std::size_t L, std::size_t M, std::size_t N,
                            std::initializer_list<PairSpec> pairs) {
  MarketBids bids;
  for (std::size_t l = 0; l < L; ++l) {
    JointBidMatrix mat(l, M, N);
    for (std::size_t m = 0; m < M; ++m) {
      for (std::size_t n = 0; n < N; ++n) {
        auto& e = mat.at(m, n);
        e = {l, m, n, 1.0, 1.0, 2.0, 0.0, false};
      }
    }
    bids.push_back(std::move(mat));
  }
  for (const auto& p : pairs) {
    bids[p.l - 1].at(p.m - 1, p.n - 1) = {p.l - 1, p.m - 1, p.n - 1, p.q, p.s, p.q + p.s, p.v, true};
  }
  return bids;
}

// Surplus-only market: feasible pairs with v = r + 2 and J = 2.
inline MarketBids surplus_bids(std::size_t L, std::size_t M, std::size_t N,
                               std::initializer_list<std::pair<Triple, double>> pairs) {
  MarketBids bids = make_bids(L, M, N, {});
  for (const auto& [t, r] : pairs) {
    bids[t.buyer].at(t.data_seller, t.uav_seller) = {t.buyer,       t.data_seller, t.uav_seller, 1.0,
                                                     1.0,           2.0,           r + 2.0,      true};
  }
  return bids;
}

// Random market with independent valuations and bids. `ties` draws values
// from a coarse grid so equal surpluses are common.
inline MarketBids random_bids(std::mt19937_64& rng, std::size_t L, std::size_t M, std::size_t N,
                              bool ties = false) {
  std::uniform_real_distribution<double> val(0.0, 12.0), bid(0.1, 5.0), coin(0.0, 1.0);
  std::uniform_int_distribution<int> grid(0, 8);
  MarketBids bids;
  for (std::size_t l = 0; l < L; ++l) {
    JointBidMatrix mat(l, M, N);
    for (std::size_t m = 0; m < M; ++m) {
      for (std::size_t n = 0; n < N; ++n) {
        const bool feasible = coin(rng) < 0.8;
        double q = bid(rng), s = bid(rng), v = val(rng);
        if (ties) {
          q = 1.0;
          s = 1.0;
          v = 2.0 + grid(rng) - 3.0;
        }
        mat.at(m, n) = {l, m, n, q, s, q + s, feasible ? v : 0.0, feasible};
      }
    }
    bids.push_back(std::move(mat));
  }
  return bids;
}

// Exhaustive maximum over every set of disjoint feasible triples.
inline double reference_optimum(const MarketBids& bids) {
  const std::size_t L = bids.size();
  if (L == 0) return 0.0;
  const std::size_t M = bids[0].num_data_sellers(), N = bids[0].num_uav_sellers();
  std::vector<bool> used_m(M), used_n(N);
  std::function<double(std::size_t)> go = [&](std::size_t l) -> double {
    if (l == L) return 0.0;
    double best = go(l + 1);
    for (std::size_t m = 0; m < M; ++m) {
      if (used_m[m]) continue;
      for (std::size_t n = 0; n < N; ++n) {
        if (used_n[n]) continue;
        const auto& e = bids[l].at(m, n);
        if (!e.feasible) continue;
        used_m[m] = used_n[n] = true;
        best = std::max(best, e.surplus() + go(l + 1));
        used_m[m] = used_n[n] = false;
      }
    }
    return best;
  };
  return go(0);
}

// Straightforward greedy over all non-negative feasible triples sorted by
// (surplus desc, l, m, n).
inline std::vector<Triple> reference_greedy(const MarketBids& bids) {
  struct Item {
    double r;
    Triple t;
  };
  std::vector<Item> items;
  for (const auto& mat : bids) {
    for (const auto& e : mat.entries()) {
      if (e.feasible && e.surplus() >= 0.0) {
        items.push_back({e.surplus(), {e.buyer_id, e.data_seller_id, e.uav_seller_id}});
      }
    }
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.r != b.r) return a.r > b.r;
    return a.t < b.t;
  });
  std::vector<Triple> out;
  for (const auto& it : items) {
    const bool clash = std::any_of(out.begin(), out.end(), [&](const Triple& w) {
      return w.buyer == it.t.buyer || w.data_seller == it.t.data_seller ||
             w.uav_seller == it.t.uav_seller;
    });
    if (!clash) out.push_back(it.t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace flmarket::testing
