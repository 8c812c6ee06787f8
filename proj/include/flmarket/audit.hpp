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
#include <cstdint>
#include <string>
#include <vector>

#include "flmarket/methods.hpp"
#include "flmarket/scenario_gen.hpp"

namespace flmarket {

enum class AuditKind { kTruthfulness, kIndividualRationality, kStability };

std::string audit_kind_name(AuditKind kind);
// Accepts "truthfulness", "ir" / "individual-rationality", "stability".
AuditKind parse_audit_kind(const std::string& name);

struct Violation {
  std::uint64_t scenario_seed = 0;
  std::string mechanism;
  std::string participant;  // e.g. "pair 1/3/2", "data-seller 3"
  std::string deviation;    // e.g. "joint x2.5", "data underbid x0.6"
  double truthful_revenue = 0.0;
  double deviated_revenue = 0.0;
};

struct AuditReport {
  AuditKind kind = AuditKind::kTruthfulness;
  std::size_t scenarios = 0;
  std::size_t deviations = 0;  // outcomes checked against the reference
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

struct AuditConfig {
  std::size_t scenarios = 100;
  GenParams params;      // size and distributions; params.seed is the base seed
  std::size_t grid = 21;  // joint-bid scale factors evenly spaced in [0.2, 3.0]
  bool include_losers = false;
  double tolerance = 1e-9;
  std::size_t threads = 0;  // 0 = hardware concurrency
};

// Evenly spaced factors in [0.2, 3.0]; grid must be >= 2.
std::vector<double> deviation_grid(std::size_t grid);

// Scenario i uses seed mix_seed(params.seed, i).
std::uint64_t audit_scenario_seed(const AuditConfig& config, std::size_t i);

// Truthfulness: for every winning pair (and every losing feasible pair when
// include_losers), re-runs the mechanism with that single pair's joint bid
// scaled by each grid factor, and with J-preserving swaps where one
// component underbids by a grid factor < 1 while the other absorbs the
// difference. A violation is a deviation whose revenue, measured against
// true costs, beats truthful bidding by more than the tolerance: pair
// revenue for every deviation, plus the underbidder's own revenue for swaps.
AuditReport audit_truthfulness(const std::vector<Mechanism>& mechanisms,
                               const AuditConfig& config);

// Every winner's pair revenue, seller shares net of bids and buyer revenue
// are >= 0; losing sellers are paid exactly 0.
AuditReport audit_individual_rationality(const std::vector<Mechanism>& mechanisms,
                                         const AuditConfig& config);

// Re-running the greedy walk on its own auctioneer list reproduces the
// allocation, and no unselected triple outranks every selected triple it
// conflicts with.
AuditReport audit_stability(const AuditConfig& config);

AuditReport run_audit(AuditKind kind, const std::vector<Mechanism>& mechanisms,
                      const AuditConfig& config);

// Negative-control fixtures.
// Subtracts `amount` from every pair total of `base`, then re-splits.
Mechanism broken_payment_fixture(Mechanism base, double amount = 10.0);
// Matching allocation, each winning pair paid exactly its joint bid.
Mechanism first_price_fixture();

}  // namespace flmarket
