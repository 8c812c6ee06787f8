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

#include "flmarket/market.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "flmarket/error.hpp"

namespace flmarket {

namespace {

constexpr double kRelTol = 1e-12;

bool close_rel(double a, double b) {
  return std::abs(a - b) <= kRelTol * std::max(std::abs(a), std::abs(b));
}

std::string idx(const char* name, std::size_t i) {
  return std::string(name) + "[" + std::to_string(i) + "]";
}

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ValidationError(field + ": " + what);
}

void require_size(const std::string& field, std::size_t got, std::size_t want,
                  const char* dim) {
  if (got != want) {
    fail(field, "expected " + std::to_string(want) + " entries (" + dim +
                    "), got " + std::to_string(got));
  }
}

void require_shape(const std::string& field, const Table& t, std::size_t rows,
                   std::size_t cols, const char* shape) {
  if (t.rows() != rows || t.cols() != cols) {
    fail(field, std::string("expected ") + shape + " = " +
                    std::to_string(rows) + "x" + std::to_string(cols) +
                    " table, got " + std::to_string(t.rows()) + "x" +
                    std::to_string(t.cols()));
  }
}

void require_positive(const std::string& field, double v) {
  if (!std::isfinite(v) || v <= 0.0) fail(field, "must be finite and > 0");
}

void require_non_negative(const std::string& field, double v) {
  if (!std::isfinite(v) || v < 0.0) fail(field, "must be finite and >= 0");
}

}  // namespace

double accuracy_of_data(double d, double alpha1, double alpha2) {
  if (!(d >= 0.0)) throw DomainError("accuracy_of_data: negative data size");
  return alpha1 * std::log1p(alpha2 * d);
}

double flying_cost(double lambda, double distance) {
  if (!(distance >= 0.0)) throw DomainError("flying_cost: negative distance");
  return lambda * distance;
}

double service_cost(double model_size_kb, double rate_kbps) {
  if (!(rate_kbps > 0.0)) throw DomainError("service_cost: rate must be > 0");
  return model_size_kb / rate_kbps;
}

double uav_total_cost(double flying, double service) {
  return flying + service;
}

double buyer_valuation(const BuyerRequest& buyer, double data_size,
                       double data_unit_scale) {
  if (data_size < buyer.required_data) return 0.0;
  return accuracy_of_data(data_size / data_unit_scale, buyer.valuation_alpha1,
                          buyer.valuation_alpha2);
}

ValuationFn default_valuation() {
  return [](const BuyerRequest& buyer, double data_size, const ServiceParams&,
            double scale) { return buyer_valuation(buyer, data_size, scale); };
}

void fill_valuations(Scenario& s, const ValuationFn& valuation) {
  const std::size_t m_count = s.num_data_sellers();
  const std::size_t n_count = s.num_uav_sellers();
  for (auto& buyer : s.buyers) {
    buyer.valuations = Table(m_count, n_count);
    const std::size_t l = buyer.buyer_id;
    for (std::size_t m = 0; m < m_count; ++m) {
      for (std::size_t n = 0; n < n_count; ++n) {
        buyer.valuations.at(m, n) =
            valuation(buyer, s.data_sellers[m].data_sizes[l],
                      s.uav_sellers[n].service_params[l], s.data_unit_scale);
      }
    }
  }
}

void Scenario::validate() const {
  const std::size_t L = buyers.size();
  const std::size_t M = data_sellers.size();
  const std::size_t N = uav_sellers.size();
  if (L == 0) fail("buyers", "at least one buyer required");
  if (M == 0) fail("data_sellers", "at least one data-seller required");
  if (N == 0) fail("uav_sellers", "at least one UAV-seller required");
  require_positive("data_unit_scale", data_unit_scale);

  for (std::size_t m = 0; m < M; ++m) {
    const auto& d = data_sellers[m];
    const std::string f = idx("data_sellers", m);
    if (d.seller_id != m) fail(f + ".id", "must equal position " + std::to_string(m));
    require_size(f + ".data_sizes", d.data_sizes.size(), L, "L");
    require_size(f + ".unit_costs", d.unit_costs.size(), L, "L");
    require_size(f + ".sell_bids", d.sell_bids.size(), L, "L");
    require_size(f + ".true_costs", d.true_costs.size(), L, "L");
    for (std::size_t l = 0; l < L; ++l) {
      require_non_negative(idx((f + ".data_sizes").c_str(), l), d.data_sizes[l]);
      require_positive(idx((f + ".unit_costs").c_str(), l), d.unit_costs[l]);
      require_positive(idx((f + ".sell_bids").c_str(), l), d.sell_bids[l]);
      const std::string tc = idx((f + ".true_costs").c_str(), l);
      require_positive(tc, d.true_costs[l]);
      if (!close_rel(d.true_costs[l], d.unit_costs[l] * d.data_sizes[l])) {
        fail(tc, "must equal unit_costs * data_sizes");
      }
    }
  }

  for (std::size_t n = 0; n < N; ++n) {
    const auto& u = uav_sellers[n];
    const std::string f = idx("uav_sellers", n);
    if (u.seller_id != n) fail(f + ".id", "must equal position " + std::to_string(n));
    require_size(f + ".distances", u.distances.size(), M, "M");
    require_size(f + ".service_params", u.service_params.size(), L, "L");
    require_positive(f + ".unit_fly_cost", u.unit_fly_cost);
    require_shape(f + ".true_costs", u.true_costs, M, L, "MxL");
    require_shape(f + ".sell_bids", u.sell_bids, M, L, "MxL");
    for (std::size_t m = 0; m < M; ++m) {
      require_non_negative(idx((f + ".distances").c_str(), m), u.distances[m]);
    }
    for (std::size_t l = 0; l < L; ++l) {
      const std::string sp = idx((f + ".service_params").c_str(), l);
      require_positive(sp + ".model_size_kb", u.service_params[l].model_size_kb);
      require_positive(sp + ".rate_kbps", u.service_params[l].rate_kbps);
    }
    for (std::size_t m = 0; m < M; ++m) {
      for (std::size_t l = 0; l < L; ++l) {
        const std::string cell = "[" + std::to_string(m) + "][" + std::to_string(l) + "]";
        require_positive(f + ".sell_bids" + cell, u.sell_bids.at(m, l));
        const double expect =
            uav_total_cost(flying_cost(u.unit_fly_cost, u.distances[m]),
                           service_cost(u.service_params[l]));
        if (!close_rel(u.true_costs.at(m, l), expect)) {
          fail(f + ".true_costs" + cell,
               "must equal flying cost + service cost");
        }
      }
    }
  }

  for (std::size_t l = 0; l < L; ++l) {
    const auto& b = buyers[l];
    const std::string f = idx("buyers", l);
    if (b.buyer_id != l) fail(f + ".id", "must equal position " + std::to_string(l));
    require_positive(f + ".required_data", b.required_data);
    require_positive(f + ".alpha1", b.valuation_alpha1);
    require_positive(f + ".alpha2", b.valuation_alpha2);
    require_shape(f + ".valuations", b.valuations, M, N, "MxN");
    for (std::size_t m = 0; m < M; ++m) {
      const bool met = data_sellers[m].data_sizes[l] >= b.required_data;
      for (std::size_t n = 0; n < N; ++n) {
        const std::string cell = f + ".valuations[" + std::to_string(m) + "][" +
                                 std::to_string(n) + "]";
        const double v = b.valuations.at(m, n);
        require_non_negative(cell, v);
        if (!met && v != 0.0) fail(cell, "must be 0 where the data requirement is unmet");
        if (met && v == 0.0) fail(cell, "must be > 0 where the data requirement is met");
      }
    }
  }
}

}  // namespace flmarket
