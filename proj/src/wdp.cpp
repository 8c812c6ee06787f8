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

#include "flmarket/wdp.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "flmarket/error.hpp"

namespace flmarket {

namespace {

constexpr double kTieEps = 1e-11;

struct Candidate {
  std::uint32_t data_seller;
  std::uint32_t uav_seller;
  double surplus;
};

void check_dims(const MarketBids& bids) {
  if (bids.empty()) return;
  const std::size_t M = bids[0].num_data_sellers();
  const std::size_t N = bids[0].num_uav_sellers();
  if (M > kMaxExactSellers || N > kMaxExactSellers) {
    throw SizeError("exact solver supports at most " +
                    std::to_string(kMaxExactSellers) +
                    " data-sellers and UAV-sellers, got M=" + std::to_string(M) +
                    " N=" + std::to_string(N));
  }
  if (bids.size() >= (std::size_t{1} << 24)) {
    throw SizeError("exact solver: too many buyers");
  }
}

class ExactSolver {
 public:
  ExactSolver(const MarketBids& bids, std::uint32_t data_mask,
              std::uint32_t uav_mask)
      : start_data_(data_mask), start_uav_(uav_mask) {
    const std::size_t L = bids.size();
    candidates_.resize(L);
    suffix_bound_.assign(L + 1, 0.0);
    for (std::size_t l = 0; l < L; ++l) {
      double best = 0.0;
      for (const auto& e : bids[l].entries()) {
        if (!e.feasible) continue;
        const double r = e.surplus();
        if (!(r > 0.0)) continue;
        if ((data_mask >> e.data_seller_id) & 1u) continue;
        if ((uav_mask >> e.uav_seller_id) & 1u) continue;
        candidates_[l].push_back({static_cast<std::uint32_t>(e.data_seller_id),
                                  static_cast<std::uint32_t>(e.uav_seller_id), r});
        best = std::max(best, r);
      }
      suffix_bound_[l] = best;
    }
    for (std::size_t l = L; l-- > 0;) suffix_bound_[l] += suffix_bound_[l + 1];
  }

  Allocation solve() {
    Allocation out;
    const std::size_t L = candidates_.size();
    std::uint32_t dm = start_data_;
    std::uint32_t um = start_uav_;
    value(0, dm, um);
    for (std::size_t l = 0; l < L; ++l) {
      const int choice = memo_.at(key(l, dm, um)).choice;
      if (choice < 0) continue;
      const auto& c = candidates_[l][static_cast<std::size_t>(choice)];
      out.triples.push_back({l, c.data_seller, c.uav_seller});
      out.objective += c.surplus;
      dm |= 1u << c.data_seller;
      um |= 1u << c.uav_seller;
    }
    return out;
  }

 private:
  struct Entry {
    double value;
    int choice;  // index into candidates_[l], or -1 for "buyer unmatched"
  };

  static std::uint64_t key(std::size_t l, std::uint32_t dm, std::uint32_t um) {
    return (static_cast<std::uint64_t>(l) << 40) |
           (static_cast<std::uint64_t>(dm) << 20) | um;
  }

  double value(std::size_t l, std::uint32_t dm, std::uint32_t um) {
    if (l == candidates_.size()) return 0.0;
    const std::uint64_t k = key(l, dm, um);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second.value;

    // Evaluated options in lexicographic preference order: pairs ascending
    // by (m, n), then leaving the buyer unmatched.
    std::vector<std::pair<int, double>> evaluated;
    double best = -std::numeric_limits<double>::infinity();
    const auto& cands = candidates_[l];
    for (std::size_t i = 0; i < cands.size(); ++i) {
      const auto& c = cands[i];
      if ((dm >> c.data_seller) & 1u || (um >> c.uav_seller) & 1u) continue;
      if (c.surplus + suffix_bound_[l + 1] < best - kTieEps) continue;
      const double v = c.surplus + value(l + 1, dm | (1u << c.data_seller),
                                         um | (1u << c.uav_seller));
      evaluated.emplace_back(static_cast<int>(i), v);
      best = std::max(best, v);
    }
    if (suffix_bound_[l + 1] >= best - kTieEps) {
      const double v = value(l + 1, dm, um);
      evaluated.emplace_back(-1, v);
      best = std::max(best, v);
    }

    Entry entry{best, -1};
    for (const auto& [choice, v] : evaluated) {
      if (v >= best - kTieEps) {
        entry = {v, choice};
        break;
      }
    }
    memo_.emplace(k, entry);
    return entry.value;
  }

  std::vector<std::vector<Candidate>> candidates_;
  std::vector<double> suffix_bound_;
  std::unordered_map<std::uint64_t, Entry> memo_;
  std::uint32_t start_data_;
  std::uint32_t start_uav_;
};

class Enumerator {
 public:
  explicit Enumerator(const MarketBids& bids) : bids_(bids) {
    const std::size_t M = bids.empty() ? 0 : bids[0].num_data_sellers();
    const std::size_t N = bids.empty() ? 0 : bids[0].num_uav_sellers();
    data_used_.assign(M, false);
    uav_used_.assign(N, false);
  }

  Allocation run() {
    visit(0, 0.0);
    Allocation out;
    out.triples = best_;
    out.objective = best_value_;
    return out;
  }

 private:
  void visit(std::size_t l, double acc) {
    if (l == bids_.size()) {
      if (acc > best_value_) {
        best_value_ = acc;
        best_ = current_;
      }
      return;
    }
    visit(l + 1, acc);
    for (const auto& e : bids_[l].entries()) {
      if (!e.feasible || data_used_[e.data_seller_id] || uav_used_[e.uav_seller_id]) {
        continue;
      }
      data_used_[e.data_seller_id] = uav_used_[e.uav_seller_id] = true;
      current_.push_back({l, e.data_seller_id, e.uav_seller_id});
      visit(l + 1, acc + e.surplus());
      current_.pop_back();
      data_used_[e.data_seller_id] = uav_used_[e.uav_seller_id] = false;
    }
  }

  const MarketBids& bids_;
  std::vector<bool> data_used_;
  std::vector<bool> uav_used_;
  std::vector<Triple> current_;
  std::vector<Triple> best_;
  double best_value_ = 0.0;
};

}  // namespace

Allocation solve_exact(const MarketBids& bids) {
  check_dims(bids);
  return ExactSolver(bids, 0u, 0u).solve();
}

Allocation solve_exact_excluding(const MarketBids& bids,
                                 std::size_t excluded_data_seller,
                                 std::size_t excluded_uav_seller) {
  check_dims(bids);
  if (!bids.empty() && (excluded_data_seller >= bids[0].num_data_sellers() ||
                        excluded_uav_seller >= bids[0].num_uav_sellers())) {
    throw std::out_of_range("solve_exact_excluding: seller index out of range");
  }
  return ExactSolver(bids, 1u << excluded_data_seller, 1u << excluded_uav_seller)
      .solve();
}

Allocation brute_force_oracle(const MarketBids& bids) {
  const std::size_t L = bids.size();
  const std::size_t M = L ? bids[0].num_data_sellers() : 0;
  const std::size_t N = L ? bids[0].num_uav_sellers() : 0;
  if (L > kMaxOracleDim || M > kMaxOracleDim || N > kMaxOracleDim) {
    throw SizeError("brute_force_oracle supports L, M, N <= " +
                    std::to_string(kMaxOracleDim));
  }
  return Enumerator(bids).run();
}

}  // namespace flmarket
