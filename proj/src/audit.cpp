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

#include "flmarket/audit.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "flmarket/rng.hpp"
#include "flmarket/vcg.hpp"
#include "parallel.hpp"

namespace flmarket {

namespace {

std::string pair_label(const Triple& t) {
  return "pair " + size_label(t.buyer + 1, t.data_seller + 1, t.uav_seller + 1);
}

std::string factor_label(const char* what, double f) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s x%.4g", what, f);
  return buf;
}

// Revenue of one triple's pair and sellers, measured against true costs.
struct TripleRevenue {
  double pair = 0.0;
  double data = 0.0;
  double uav = 0.0;
};

TripleRevenue revenue_of(const AuctionOutcome& o, const Triple& t, const SellerPairBid& truth) {
  TripleRevenue r;
  const auto it = o.payments.pair_totals.find(t);
  if (it == o.payments.pair_totals.end()) return r;
  r.pair = it->second - truth.joint_bid;
  r.data = o.payments.data_seller_payments[t.data_seller] - truth.data_bid;
  r.uav = o.payments.uav_seller_payments[t.uav_seller] - truth.uav_bid;
  return r;
}

struct ScenarioResult {
  std::size_t deviations = 0;
  std::vector<Violation> violations;
};

template <typename PerScenario>
AuditReport run_per_scenario(AuditKind kind, const AuditConfig& config, PerScenario&& body) {
  std::vector<ScenarioResult> results(config.scenarios);
  detail::parallel_for(config.scenarios, config.threads, [&](std::size_t i) {
    GenParams p = config.params;
    p.seed = audit_scenario_seed(config, i);
    const Scenario s = generate(p);
    body(s, results[i]);
  });
  AuditReport report;
  report.kind = kind;
  report.scenarios = config.scenarios;
  for (auto& r : results) {
    report.deviations += r.deviations;
    for (auto& v : r.violations) report.violations.push_back(std::move(v));
  }
  return report;
}

void truthfulness_for(const Scenario& s, const Mechanism& mech, const AuditConfig& config,
                      const std::vector<double>& grid, ScenarioResult& out) {
  const MarketBids bids = true_cost_bids(s);
  const AuctionOutcome base = mech.run(bids);

  std::vector<Triple> targets = base.allocation.triples;
  if (config.include_losers) {
    for (const auto& matrix : bids) {
      for (const auto& e : matrix.entries()) {
        const Triple t{e.buyer_id, e.data_seller_id, e.uav_seller_id};
        if (e.feasible && !base.allocation.contains(t)) targets.push_back(t);
      }
    }
  }

  const double tol = config.tolerance;
  for (const Triple& t : targets) {
    const SellerPairBid& truth = bids[t.buyer].at(t.data_seller, t.uav_seller);
    const TripleRevenue ref = revenue_of(base, t, truth);
    const bool winner = base.allocation.contains(t);

    auto check = [&](const std::string& deviation, double data_bid, double uav_bid,
                     int underbidder) {
      const MarketBids dev =
          with_pair_bid(bids, t.buyer, t.data_seller, t.uav_seller, data_bid, uav_bid);
      const TripleRevenue got = revenue_of(mech.run(dev), t, truth);
      ++out.deviations;
      if (got.pair > ref.pair + tol) {
        out.violations.push_back(
            {s.seed, mech.name, pair_label(t), deviation, ref.pair, got.pair});
      }
      if (underbidder == 1 && got.data > ref.data + tol) {
        out.violations.push_back({s.seed, mech.name,
                                  "data-seller " + std::to_string(t.data_seller + 1) +
                                      " in " + pair_label(t),
                                  deviation, ref.data, got.data});
      }
      if (underbidder == 2 && got.uav > ref.uav + tol) {
        out.violations.push_back({s.seed, mech.name,
                                  "uav-seller " + std::to_string(t.uav_seller + 1) +
                                      " in " + pair_label(t),
                                  deviation, ref.uav, got.uav});
      }
    };

    for (double f : grid) {
      check(factor_label("joint", f), truth.data_bid * f, truth.uav_bid * f, 0);
    }
    if (!winner) continue;
    for (double f : grid) {
      if (!(f < 1.0)) continue;
      const double q = truth.data_bid * f;
      check(factor_label("data underbid", f), q, truth.uav_bid + (truth.data_bid - q), 1);
      const double su = truth.uav_bid * f;
      check(factor_label("uav underbid", f), truth.data_bid + (truth.uav_bid - su), su, 2);
    }
  }
}

void ir_for(const Scenario& s, const Mechanism& mech, double tol, ScenarioResult& out) {
  const MarketBids bids = build_joint_bids(s);
  const AuctionOutcome o = mech.run(bids);
  ++out.deviations;
  auto flag = [&](const std::string& who, const std::string& what, double value) {
    out.violations.push_back({s.seed, mech.name, who, what, 0.0, value});
  };

  const std::size_t M = bids.empty() ? 0 : bids[0].num_data_sellers();
  const std::size_t N = bids.empty() ? 0 : bids[0].num_uav_sellers();
  const auto& pd = o.payments.data_seller_payments;
  const auto& pu = o.payments.uav_seller_payments;
  if (!o.allocation.triples.empty() && (pd.size() != M || pu.size() != N)) {
    flag("schedule", "payment vectors missing", 0.0);
    return;
  }
  for (const auto& [t, total] : o.payments.pair_totals) {
    if (!o.allocation.contains(t)) flag(pair_label(t), "paid without winning", total);
  }

  std::vector<bool> data_won(M), uav_won(N);
  for (const Triple& t : o.allocation.triples) {
    data_won[t.data_seller] = uav_won[t.uav_seller] = true;
    const SellerPairBid& e = bids[t.buyer].at(t.data_seller, t.uav_seller);
    const auto it = o.payments.pair_totals.find(t);
    if (it == o.payments.pair_totals.end()) {
      flag(pair_label(t), "winner without payment", 0.0);
      continue;
    }
    const double pair = it->second - e.joint_bid;
    const double data = pd[t.data_seller] - e.data_bid;
    const double uav = pu[t.uav_seller] - e.uav_bid;
    const double buyer = e.valuation - e.joint_bid;
    if (pair < -tol) flag(pair_label(t), "pair revenue < 0", pair);
    if (data < -tol) flag("data-seller " + std::to_string(t.data_seller + 1), "share < bid", data);
    if (uav < -tol) flag("uav-seller " + std::to_string(t.uav_seller + 1), "share < bid", uav);
    if (buyer < -tol) flag("buyer " + std::to_string(t.buyer + 1), "revenue < 0", buyer);
  }
  for (std::size_t m = 0; m < pd.size(); ++m) {
    if (!data_won[m] && pd[m] != 0.0) flag("data-seller " + std::to_string(m + 1), "loser paid", pd[m]);
  }
  for (std::size_t n = 0; n < pu.size(); ++n) {
    if (!uav_won[n] && pu[n] != 0.0) flag("uav-seller " + std::to_string(n + 1), "loser paid", pu[n]);
  }
}

void stability_for(const Scenario& s, ScenarioResult& out) {
  const MarketBids bids = build_joint_bids(s);
  const PreferenceLists lists = build_preference_lists(bids);
  const Allocation first = greedy_match(lists);
  const Allocation again = greedy_match(lists);
  const AuctionOutcome full = run_matching(bids);
  ++out.deviations;
  if (!(first.triples == again.triples) || !(full.allocation.triples == first.triples)) {
    out.violations.push_back({s.seed, "matching", "allocation", "re-run differs", 0.0, 0.0});
  }

  // No unselected triple may outrank all selected triples it conflicts with.
  for (const PreferenceEntry& e : lists.auctioneer) {
    if (first.contains(e.triple())) continue;
    bool dominated = false;
    for (const Triple& w : first.triples) {
      if (w.buyer != e.buyer && w.data_seller != e.data_seller && w.uav_seller != e.uav_seller) {
        continue;
      }
      const double wv = bids[w.buyer].at(w.data_seller, w.uav_seller).surplus();
      const PreferenceEntry we{w.buyer, w.data_seller, w.uav_seller, wv};
      if (ranks_before(we, e)) {
        dominated = true;
        break;
      }
    }
    ++out.deviations;
    if (!dominated) {
      out.violations.push_back({s.seed, "matching", pair_label(e.triple()),
                                "blocking triple", 0.0, e.value});
    }
  }
}

}  // namespace

std::string audit_kind_name(AuditKind kind) {
  switch (kind) {
    case AuditKind::kTruthfulness: return "truthfulness";
    case AuditKind::kIndividualRationality: return "individual-rationality";
    case AuditKind::kStability: return "stability";
  }
  return "?";
}

AuditKind parse_audit_kind(const std::string& name) {
  if (name == "truthfulness") return AuditKind::kTruthfulness;
  if (name == "ir" || name == "individual-rationality") return AuditKind::kIndividualRationality;
  if (name == "stability") return AuditKind::kStability;
  throw std::invalid_argument("unknown audit kind '" + name + "'");
}

std::vector<double> deviation_grid(std::size_t grid) {
  if (grid < 2) throw std::invalid_argument("deviation grid needs at least 2 points");
  std::vector<double> out(grid);
  for (std::size_t i = 0; i < grid; ++i) {
    out[i] = 0.2 + (3.0 - 0.2) * static_cast<double>(i) / static_cast<double>(grid - 1);
  }
  return out;
}

std::uint64_t audit_scenario_seed(const AuditConfig& config, std::size_t i) {
  return mix_seed(config.params.seed, i);
}

AuditReport audit_truthfulness(const std::vector<Mechanism>& mechanisms,
                               const AuditConfig& config) {
  const auto grid = deviation_grid(config.grid);
  return run_per_scenario(AuditKind::kTruthfulness, config,
                          [&](const Scenario& s, ScenarioResult& out) {
                            for (const auto& mech : mechanisms) {
                              truthfulness_for(s, mech, config, grid, out);
                            }
                          });
}

AuditReport audit_individual_rationality(const std::vector<Mechanism>& mechanisms,
                                         const AuditConfig& config) {
  return run_per_scenario(AuditKind::kIndividualRationality, config,
                          [&](const Scenario& s, ScenarioResult& out) {
                            for (const auto& mech : mechanisms) {
                              ir_for(s, mech, config.tolerance, out);
                            }
                          });
}

AuditReport audit_stability(const AuditConfig& config) {
  return run_per_scenario(AuditKind::kStability, config,
                          [&](const Scenario& s, ScenarioResult& out) { stability_for(s, out); });
}

AuditReport run_audit(AuditKind kind, const std::vector<Mechanism>& mechanisms,
                      const AuditConfig& config) {
  switch (kind) {
    case AuditKind::kTruthfulness: return audit_truthfulness(mechanisms, config);
    case AuditKind::kIndividualRationality:
      return audit_individual_rationality(mechanisms, config);
    case AuditKind::kStability: return audit_stability(config);
  }
  throw std::invalid_argument("unknown audit kind");
}

Mechanism broken_payment_fixture(Mechanism base, double amount) {
  auto run = base.run;
  return {base.name + "-broken", [run, amount](const MarketBids& bids) {
            AuctionOutcome o = run(bids);
            for (auto& [t, total] : o.payments.pair_totals) total -= amount;
            apply_splits(bids, o.payments);
            finalize_outcome(bids, o);
            return o;
          }};
}

Mechanism first_price_fixture() {
  return {"matching-first-price", [](const MarketBids& bids) {
            AuctionOutcome o = run_matching(bids);
            for (auto& [t, total] : o.payments.pair_totals) {
              total = bids[t.buyer].at(t.data_seller, t.uav_seller).joint_bid;
            }
            apply_splits(bids, o.payments);
            finalize_outcome(bids, o);
            return o;
          }};
}

}  // namespace flmarket
