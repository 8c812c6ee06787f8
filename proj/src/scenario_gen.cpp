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

#include "flmarket/scenario_gen.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "flmarket/error.hpp"
#include "flmarket/rng.hpp"

namespace flmarket {

namespace {

void check_interval(const char* name, const Interval& iv, bool positive) {
  if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || iv.lo > iv.hi) {
    throw ValidationError(std::string(name) + ": need finite lo <= hi");
  }
  if (positive && !(iv.lo > 0.0)) {
    throw ValidationError(std::string(name) + ": lower bound must be > 0");
  }
}

void check_positive(const char* name, double v) {
  if (!std::isfinite(v) || !(v > 0.0)) {
    throw ValidationError(std::string(name) + ": must be > 0");
  }
}

double draw(Rng& rng, const Interval& iv) { return rng.uniform(iv.lo, iv.hi); }

}  // namespace

void GenParams::validate() const {
  if (buyers == 0 || data_sellers == 0 || uav_sellers == 0) {
    throw ValidationError("size: L, M and N must all be >= 1");
  }
  check_interval("data_size", data_size, true);
  check_positive("data_unit_scale", data_unit_scale);
  check_interval("unit_cost", unit_cost, true);
  check_interval("distance", distance, false);
  if (distance.lo < 0.0) throw ValidationError("distance: must be >= 0");
  check_interval("unit_fly_cost", unit_fly_cost, true);
  check_interval("model_size", model_size, true);
  check_interval("rate", rate, true);
  check_interval("alpha1", alpha1, true);
  check_positive("alpha2", alpha2);
  check_positive("required_data", required_data);
  check_interval("bid_factor", bid_factor, true);
}

void parse_size(const std::string& text, GenParams& params) {
  std::istringstream in(text);
  std::size_t dims[3] = {0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    long long v = 0;
    if (!(in >> v) || v <= 0) throw std::invalid_argument("size '" + text + "': expected L/M/N");
    dims[i] = static_cast<std::size_t>(v);
    if (i < 2) {
      char sep = 0;
      if (!(in >> sep) || sep != '/') {
        throw std::invalid_argument("size '" + text + "': expected L/M/N");
      }
    }
  }
  if (in >> std::ws; !in.eof()) {
    throw std::invalid_argument("size '" + text + "': trailing characters");
  }
  params.buyers = dims[0];
  params.data_sellers = dims[1];
  params.uav_sellers = dims[2];
}

std::string size_label(std::size_t L, std::size_t M, std::size_t N) {
  return std::to_string(L) + "/" + std::to_string(M) + "/" + std::to_string(N);
}

Scenario generate(const GenParams& p, const ValuationFn& valuation) {
  p.validate();
  const std::size_t L = p.buyers;
  const std::size_t M = p.data_sellers;
  const std::size_t N = p.uav_sellers;
  Rng rng(p.seed);

  Scenario s;
  s.seed = p.seed;
  s.data_unit_scale = p.data_unit_scale;

  s.data_sellers.resize(M);
  for (std::size_t m = 0; m < M; ++m) {
    auto& d = s.data_sellers[m];
    d.seller_id = m;
    d.data_sizes.resize(L);
    d.unit_costs.resize(L);
    for (std::size_t l = 0; l < L; ++l) {
      d.data_sizes[l] = draw(rng, p.data_size) * p.data_unit_scale;
      d.unit_costs[l] = draw(rng, p.unit_cost);
    }
  }

  s.uav_sellers.resize(N);
  for (std::size_t n = 0; n < N; ++n) {
    auto& u = s.uav_sellers[n];
    u.seller_id = n;
    u.unit_fly_cost = draw(rng, p.unit_fly_cost);
    u.distances.resize(M);
    for (std::size_t m = 0; m < M; ++m) u.distances[m] = draw(rng, p.distance);
  }

  std::vector<double> model_sizes(L);
  s.buyers.resize(L);
  for (std::size_t l = 0; l < L; ++l) {
    auto& b = s.buyers[l];
    b.buyer_id = l;
    b.required_data = p.required_data;
    b.valuation_alpha2 = p.alpha2;
    model_sizes[l] = draw(rng, p.model_size);
    b.valuation_alpha1 = draw(rng, p.alpha1);
  }

  for (std::size_t n = 0; n < N; ++n) {
    auto& u = s.uav_sellers[n];
    u.service_params.resize(L);
    for (std::size_t l = 0; l < L; ++l) {
      u.service_params[l] = {model_sizes[l], draw(rng, p.rate)};
    }
  }

  std::vector<double> data_factor(M, 1.0);
  std::vector<double> uav_factor(N, 1.0);
  if (!p.truthful) {
    for (auto& f : data_factor) f = draw(rng, p.bid_factor);
    for (auto& f : uav_factor) f = draw(rng, p.bid_factor);
  }

  for (std::size_t m = 0; m < M; ++m) {
    auto& d = s.data_sellers[m];
    d.true_costs.resize(L);
    d.sell_bids.resize(L);
    for (std::size_t l = 0; l < L; ++l) {
      d.true_costs[l] = d.unit_costs[l] * d.data_sizes[l];
      d.sell_bids[l] = d.true_costs[l] * data_factor[m];
    }
  }
  for (std::size_t n = 0; n < N; ++n) {
    auto& u = s.uav_sellers[n];
    u.true_costs = Table(M, L);
    u.sell_bids = Table(M, L);
    for (std::size_t m = 0; m < M; ++m) {
      const double fly = flying_cost(u.unit_fly_cost, u.distances[m]);
      for (std::size_t l = 0; l < L; ++l) {
        const double cost = uav_total_cost(fly, service_cost(u.service_params[l]));
        u.true_costs.at(m, l) = cost;
        u.sell_bids.at(m, l) = cost * uav_factor[n];
      }
    }
  }

  fill_valuations(s, valuation);
  s.validate();
  return s;
}

}  // namespace flmarket
