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

#include "flmarket/audit.hpp"
#include "flmarket/error.hpp"

namespace flmarket {
namespace {

AuditConfig config(std::size_t scenarios, std::size_t size) {
  AuditConfig c;
  c.scenarios = scenarios;
  c.params.buyers = c.params.data_sellers = c.params.uav_sellers = size;
  c.params.seed = 2026;
  return c;
}

TEST(DeviationGrid, EvenlySpaced) {
  const auto g = deviation_grid(21);
  ASSERT_EQ(g.size(), 21u);
  EXPECT_DOUBLE_EQ(g.front(), 0.2);
  EXPECT_DOUBLE_EQ(g.back(), 3.0);
  for (std::size_t i = 1; i < g.size(); ++i) EXPECT_NEAR(g[i] - g[i - 1], 0.14, 1e-12);
  EXPECT_THROW(deviation_grid(1), std::invalid_argument);
}

TEST(AuditKind, Names) {
  EXPECT_EQ(parse_audit_kind("truthfulness"), AuditKind::kTruthfulness);
  EXPECT_EQ(parse_audit_kind("ir"), AuditKind::kIndividualRationality);
  EXPECT_EQ(parse_audit_kind("individual-rationality"), AuditKind::kIndividualRationality);
  EXPECT_EQ(parse_audit_kind("stability"), AuditKind::kStability);
  EXPECT_THROW(parse_audit_kind("fairness"), std::invalid_argument);
  for (auto k : {AuditKind::kTruthfulness, AuditKind::kIndividualRationality, AuditKind::kStability}) {
    EXPECT_EQ(parse_audit_kind(audit_kind_name(k)), k);
  }
}

TEST(Audit, TruthfulnessHoldsForBothMechanisms) {
  const AuditReport r =
      audit_truthfulness({vcg_mechanism(), matching_mechanism()}, config(40, 3));
  EXPECT_TRUE(r.passed()) << r.violations.size();
  EXPECT_EQ(r.scenarios, 40u);
  EXPECT_GT(r.deviations, 40u * 21u);
}

TEST(Audit, MatchingTruthfulForLosersToo) {
  AuditConfig c = config(30, 3);
  c.include_losers = true;
  EXPECT_TRUE(audit_truthfulness({matching_mechanism()}, c).passed());
}

TEST(Audit, ListSuccessorRuleIsCaught) {
  const AuditReport r = audit_truthfulness(
      {matching_mechanism({CriticalValueRule::kListSuccessor})}, config(100, 4));
  EXPECT_FALSE(r.passed());
  for (const auto& v : r.violations) EXPECT_GT(v.deviated_revenue, v.truthful_revenue + 1e-9);
}

TEST(Audit, IndividualRationality) {
  EXPECT_TRUE(audit_individual_rationality({vcg_mechanism(), matching_mechanism()}, config(200, 4))
                  .passed());
}

TEST(Audit, NegativeControls) {
  const AuditConfig c = config(50, 3);
  EXPECT_FALSE(audit_individual_rationality({broken_payment_fixture(matching_mechanism())}, c).passed());
  // VCG payments sit well above the bids, so a larger cut is needed.
  EXPECT_FALSE(audit_individual_rationality({broken_payment_fixture(vcg_mechanism(), 40.0)}, c).passed());
  EXPECT_TRUE(audit_individual_rationality({first_price_fixture()}, c).passed());
  EXPECT_FALSE(audit_truthfulness({first_price_fixture()}, c).passed());
}

TEST(Audit, Stability) {
  const AuditReport r = audit_stability(config(300, 5));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.scenarios, 300u);
}

TEST(Audit, ReportIndependentOfThreadCount) {
  AuditConfig one = config(30, 4);
  one.threads = 1;
  AuditConfig four = one;
  four.threads = 4;
  const auto mech = {matching_mechanism({CriticalValueRule::kListSuccessor})};
  const AuditReport a = audit_truthfulness(mech, one), b = audit_truthfulness(mech, four);
  ASSERT_EQ(a.violations.size(), b.violations.size());
  EXPECT_EQ(a.deviations, b.deviations);
  for (std::size_t i = 0; i < a.violations.size(); ++i) {
    EXPECT_EQ(a.violations[i].scenario_seed, b.violations[i].scenario_seed);
    EXPECT_EQ(a.violations[i].participant, b.violations[i].participant);
    EXPECT_EQ(a.violations[i].deviation, b.violations[i].deviation);
  }
}

}  // namespace
}  // namespace flmarket
