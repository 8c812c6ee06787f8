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

// Participants of the three-party market and the scalar cost/valuation model.
//
// Index conventions: buyers l in [0, L), data-sellers m in [0, M), UAV-sellers
// n in [0, N). All monetary quantities share one abstract currency unit.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace flmarket {

// Dense row-major matrix of doubles.
class Table {
 public:
  Table() = default;
  Table(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<double>& values() const { return data_; }

  bool operator==(const Table&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct DataSellerBid {
  std::size_t seller_id = 0;
  std::vector<double> data_sizes;  // raw units, one per buyer
  std::vector<double> unit_costs;  // currency per raw unit
  std::vector<double> sell_bids;
  std::vector<double> true_costs;  // unit_costs[l] * data_sizes[l]

  bool operator==(const DataSellerBid&) const = default;
};

// Determinants of the service cost of one UAV for one buyer's model.
struct ServiceParams {
  double model_size_kb = 0.0;
  double rate_kbps = 0.0;

  bool operator==(const ServiceParams&) const = default;
};

struct UavSellerBid {
  std::size_t seller_id = 0;
  std::vector<double> distances;  // meters to each data-seller, size M
  double unit_fly_cost = 0.0;
  std::vector<ServiceParams> service_params;  // one per buyer, size L
  Table true_costs;                           // M x L
  Table sell_bids;                            // M x L

  bool operator==(const UavSellerBid&) const = default;
};

struct BuyerRequest {
  std::size_t buyer_id = 0;
  double required_data = 0.0;  // raw units
  double valuation_alpha1 = 0.0;
  double valuation_alpha2 = 0.0;
  Table valuations;  // M x N, zero where the data requirement is unmet

  bool operator==(const BuyerRequest&) const = default;
};

struct Scenario {
  std::vector<BuyerRequest> buyers;
  std::vector<DataSellerBid> data_sellers;
  std::vector<UavSellerBid> uav_sellers;
  double data_unit_scale = 500.0;
  std::uint64_t seed = 0;

  std::size_t num_buyers() const { return buyers.size(); }
  std::size_t num_data_sellers() const { return data_sellers.size(); }
  std::size_t num_uav_sellers() const { return uav_sellers.size(); }

  // Throws ValidationError naming the first offending field.
  void validate() const;

  bool operator==(const Scenario&) const = default;
};

// alpha1 * ln(1 + alpha2 * d). Throws DomainError for negative d.
double accuracy_of_data(double d, double alpha1, double alpha2);

// lambda * distance. Throws DomainError for negative distance.
double flying_cost(double lambda, double distance);

// Transfer delay model_size / rate, used directly as a cost.
double service_cost(double model_size_kb, double rate_kbps);
inline double service_cost(const ServiceParams& p) {
  return service_cost(p.model_size_kb, p.rate_kbps);
}

double uav_total_cost(double flying, double service);

// Zero when data_size < required_data, otherwise the log curve evaluated on
// normalized units (data_size / data_unit_scale).
double buyer_valuation(const BuyerRequest& buyer, double data_size,
                       double data_unit_scale);

// Pluggable valuation v_{l,(m,n)}. The default ignores the UAV's service
// parameters.
using ValuationFn = std::function<double(const BuyerRequest& buyer,
                                         double data_size,
                                         const ServiceParams& service,
                                         double data_unit_scale)>;

ValuationFn default_valuation();

// Recomputes every buyer's valuation table from the data sizes.
void fill_valuations(Scenario& scenario,
                     const ValuationFn& valuation = default_valuation());

}  // namespace flmarket
