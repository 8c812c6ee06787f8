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

// Published per-winner figures of one matching run at 8/12/10, printed to
// four decimals. Stored in integer units of 1e-4 so that identity checks at
// the printed precision are exact.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

namespace flmarket::testing {

struct PrintedRow {
  const char* label;  // l/m/n, 1-based
  std::int64_t uav_bid, do_bid, joint_bid, total_payment, pair_revenue;
  std::int64_t uav_payment, uav_revenue, do_payment, do_revenue;

  // The joint bid is defined as the component sum; one row prints a value
  // with transposed digits.
  std::int64_t component_joint() const { return uav_bid + do_bid; }
};

inline const std::array<PrintedRow, 8> kPrintedRows = {{
    {"1/1/8", 18304, 26219, 44523, 46337, 1814, 19066, 762, 27271, 1052},
    {"2/12/7", 16292, 29789, 40681, 46187, 106, 16329, 37, 29858, 69},
    {"3/7/5", 16438, 32232, 48670, 48910, 240, 16519, 81, 32391, 159},
    {"4/10/4", 11473, 27552, 39025, 39537, 502, 11624, 151, 27913, 361},
    {"5/3/2", 10655, 30868, 41523, 42638, 1115, 10941, 286, 31697, 829},
    {"6/11/10", 12048, 36317, 48365, 48609, 244, 12109, 61, 36500, 183},
    {"7/5/6", 8124, 24433, 32557, 32562, 5, 8125, 1, 24437, 40},
    {"8/8/1", 16318, 38899, 55217, 55673, 456, 16453, 135, 39220, 321},
}};

inline double units(std::int64_t v) { return static_cast<double>(v) * 1e-4; }

struct IdentityCheck {
  std::string row;
  std::string name;
  std::int64_t lhs;  // printed cell
  std::int64_t rhs;  // recomputed from other printed cells
  bool ok(std::int64_t tol) const { return std::llabs(lhs - rhs) <= tol; }
};

// The four revenue/payment identities of every row.
inline std::vector<IdentityCheck> revenue_identities() {
  std::vector<IdentityCheck> out;
  for (const auto& r : kPrintedRows) {
    out.push_back({r.label, "pair revenue", r.pair_revenue, r.total_payment - r.component_joint()});
    out.push_back({r.label, "uav revenue", r.uav_revenue, r.uav_payment - r.uav_bid});
    out.push_back({r.label, "do revenue", r.do_revenue, r.do_payment - r.do_bid});
    out.push_back({r.label, "payment sum", r.total_payment, r.uav_payment + r.do_payment});
  }
  return out;
}

}  // namespace flmarket::testing
