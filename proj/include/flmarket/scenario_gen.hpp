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

#include "flmarket/market.hpp"

namespace flmarket {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double mid() const { return 0.5 * (lo + hi); }
  bool operator==(const Interval&) const = default;
};

// Distribution parameters of a random market. Defaults are the reference
// simulation settings.
struct GenParams {
  std::size_t buyers = 3;        // L
  std::size_t data_sellers = 3;  // M
  std::size_t uav_sellers = 3;   // N
  Interval data_size{10.0, 30.0};  // normalized units
  double data_unit_scale = 500.0;
  Interval unit_cost{0.0002, 0.0004};  // per raw unit
  Interval distance{10.0, 100.0};      // meters
  Interval unit_fly_cost{0.02, 0.05};
  Interval model_size{100.0, 500.0};  // KB
  Interval rate{100.0, 300.0};        // KB/s
  Interval alpha1{8.0, 12.0};
  double alpha2 = 1.0;
  double required_data = 5000.0;  // raw units
  std::uint64_t seed = 1;
  bool truthful = true;
  // Per-seller multiplicative bid factor, drawn only when !truthful.
  Interval bid_factor{0.8, 1.2};

  // Throws ValidationError naming the offending parameter.
  void validate() const;

  bool operator==(const GenParams&) const = default;
};

// "L/M/N" -> sizes. Throws std::invalid_argument on malformed input.
void parse_size(const std::string& text, GenParams& params);
std::string size_label(std::size_t L, std::size_t M, std::size_t N);

// Draws a scenario. The Rng stream is consumed in this fixed order:
//   1. per data-seller m, per buyer l: normalized data size, unit cost
//   2. per UAV n: unit flying cost, then per data-seller m: distance
//   3. per buyer l: model size, alpha1
//   4. per UAV n, per buyer l: transfer rate
//   5. untruthful only: per data-seller, then per UAV, a bid factor
Scenario generate(const GenParams& params,
                  const ValuationFn& valuation = default_valuation());

}  // namespace flmarket
