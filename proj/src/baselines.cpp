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

#include "flmarket/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <utility>
#include <vector>

#include "flmarket/error.hpp"
#include "flmarket/rng.hpp"

namespace flmarket {

namespace {

std::size_t dim_m(const MarketBids& b) { return b.empty() ? 0 : b[0].num_data_sellers(); }
std::size_t dim_n(const MarketBids& b) { return b.empty() ? 0 : b[0].num_uav_sellers(); }

std::vector<const SellerPairBid*> tradeable(const MarketBids& bids) {
  std::vector<const SellerPairBid*> out;
  for (const auto& matrix : bids) {
    for (const auto& e : matrix.entries()) {
      if (e.feasible && e.surplus() >= 0.0) out.push_back(&e);
    }
  }
  return out;
}

bool lex_less(const SellerPairBid* a, const SellerPairBid* b) {
  return std::tie(a->buyer_id, a->data_seller_id, a->uav_seller_id) <
         std::tie(b->buyer_id, b->data_seller_id, b->uav_seller_id);
}

// Scan in order, keep every triple disjoint from those already kept.
Allocation greedy_by(const MarketBids& bids, std::vector<const SellerPairBid*> order) {
  std::vector<bool> buyer_used(bids.size()), data_used(dim_m(bids)), uav_used(dim_n(bids));
  Allocation out;
  for (const SellerPairBid* e : order) {
    if (buyer_used[e->buyer_id] || data_used[e->data_seller_id] || uav_used[e->uav_seller_id]) {
      continue;
    }
    buyer_used[e->buyer_id] = data_used[e->data_seller_id] = uav_used[e->uav_seller_id] = true;
    out.triples.push_back({e->buyer_id, e->data_seller_id, e->uav_seller_id});
    out.objective += e->surplus();
  }
  std::sort(out.triples.begin(), out.triples.end());
  return out;
}

// Genome: one gene per buyer, an index into that buyer's candidate list or
// -1 for no trade.
class Foga {
 public:
  Foga(const MarketBids& bids, const FogaConfig& config)
      : bids_(bids), config_(config), rng_(config.seed) {
    candidates_.resize(bids.size());
    for (std::size_t l = 0; l < bids.size(); ++l) {
      for (const auto& e : bids[l].entries()) {
        if (e.feasible && e.surplus() > 0.0) candidates_[l].push_back(&e);
      }
    }
    data_used_.resize(dim_m(bids));
    uav_used_.resize(dim_n(bids));
  }

  Allocation run() {
    const std::size_t L = bids_.size();
    std::vector<Individual> pop;
    pop.reserve(config_.population_size);

    // One individual starts from each buyer's favourite pair; the rest are
    // random.
    Individual greedy;
    greedy.genes.resize(L);
    for (std::size_t l = 0; l < L; ++l) greedy.genes[l] = best_gene(l);
    evaluate(greedy);
    pop.push_back(std::move(greedy));
    while (pop.size() < config_.population_size) {
      Individual ind;
      ind.genes.resize(L);
      for (std::size_t l = 0; l < L; ++l) ind.genes[l] = random_gene(l);
      evaluate(ind);
      pop.push_back(std::move(ind));
    }

    Individual best = *std::max_element(pop.begin(), pop.end(), worse);
    fragment_search(best);

    for (std::size_t g = 0; g < config_.generations; ++g) {
      std::vector<Individual> next;
      next.reserve(pop.size());
      next.push_back(best);
      while (next.size() < pop.size()) {
        const Individual& a = tournament(pop);
        const Individual& b = tournament(pop);
        Individual child = a;
        if (rng_.unit() < config_.crossover_rate) {
          for (std::size_t l = 0; l < L; ++l) {
            if (rng_.unit() < 0.5) child.genes[l] = b.genes[l];
          }
        }
        for (std::size_t l = 0; l < L; ++l) {
          if (rng_.unit() < config_.mutation_rate) child.genes[l] = random_gene(l);
        }
        evaluate(child);
        next.push_back(std::move(child));
      }
      pop = std::move(next);
      Individual gen_best = *std::max_element(pop.begin(), pop.end(), worse);
      fragment_search(gen_best);
      if (gen_best.fitness > best.fitness) best = std::move(gen_best);
    }

    Allocation out;
    for (std::size_t l = 0; l < L; ++l) {
      if (best.genes[l] < 0) continue;
      const SellerPairBid* e = candidates_[l][static_cast<std::size_t>(best.genes[l])];
      out.triples.push_back({l, e->data_seller_id, e->uav_seller_id});
      out.objective += e->surplus();
    }
    return out;
  }

 private:
  struct Individual {
    std::vector<int> genes;
    double fitness = 0.0;
  };

  static bool worse(const Individual& a, const Individual& b) { return a.fitness < b.fitness; }

  int random_gene(std::size_t l) {
    const std::size_t k = candidates_[l].size();
    return static_cast<int>(rng_.index(k + 1)) - 1;
  }

  int best_gene(std::size_t l) const {
    int best = -1;
    double value = 0.0;
    for (std::size_t i = 0; i < candidates_[l].size(); ++i) {
      if (candidates_[l][i]->surplus() > value) {
        value = candidates_[l][i]->surplus();
        best = static_cast<int>(i);
      }
    }
    return best;
  }

  double surplus(std::size_t l, int gene) const {
    return gene < 0 ? 0.0 : candidates_[l][static_cast<std::size_t>(gene)]->surplus();
  }

  // Drops conflicting genes, higher surplus first (ties to the lower buyer
  // index), and stores the fitness of what remains.
  void evaluate(Individual& ind) {
    const std::size_t L = ind.genes.size();
    order_.resize(L);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return surplus(a, ind.genes[a]) > surplus(b, ind.genes[b]);
    });
    std::fill(data_used_.begin(), data_used_.end(), false);
    std::fill(uav_used_.begin(), uav_used_.end(), false);
    ind.fitness = 0.0;
    for (std::size_t l : order_) {
      if (ind.genes[l] < 0) continue;
      const SellerPairBid* e = candidates_[l][static_cast<std::size_t>(ind.genes[l])];
      if (data_used_[e->data_seller_id] || uav_used_[e->uav_seller_id]) {
        ind.genes[l] = -1;
        continue;
      }
      data_used_[e->data_seller_id] = uav_used_[e->uav_seller_id] = true;
      ind.fitness += e->surplus();
    }
  }

  void fragment_search(Individual& ind) {
    for (std::size_t pass = 0; pass < config_.fragment_passes; ++pass) {
      for (std::size_t l = 0; l < ind.genes.size(); ++l) {
        const int k = static_cast<int>(candidates_[l].size());
        for (int gene = -1; gene < k; ++gene) {
          if (gene == ind.genes[l]) continue;
          Individual trial = ind;
          trial.genes[l] = gene;
          evaluate(trial);
          if (trial.fitness > ind.fitness) ind = std::move(trial);
        }
      }
    }
  }

  const Individual& tournament(const std::vector<Individual>& pop) {
    const Individual& a = pop[rng_.index(pop.size())];
    const Individual& b = pop[rng_.index(pop.size())];
    return a.fitness >= b.fitness ? a : b;
  }

  const MarketBids& bids_;
  FogaConfig config_;
  Rng rng_;
  std::vector<std::vector<const SellerPairBid*>> candidates_;
  std::vector<std::size_t> order_;
  std::vector<bool> data_used_;
  std::vector<bool> uav_used_;
};

}  // namespace

Allocation run_hvpm(const MarketBids& bids) {
  auto order = tradeable(bids);
  std::sort(order.begin(), order.end(), [](const SellerPairBid* a, const SellerPairBid* b) {
    if (a->valuation != b->valuation) return a->valuation > b->valuation;
    return lex_less(a, b);
  });
  return greedy_by(bids, std::move(order));
}

Allocation run_lcpm(const MarketBids& bids) {
  auto order = tradeable(bids);
  std::sort(order.begin(), order.end(), [](const SellerPairBid* a, const SellerPairBid* b) {
    if (a->joint_bid != b->joint_bid) return a->joint_bid < b->joint_bid;
    return lex_less(a, b);
  });
  return greedy_by(bids, std::move(order));
}

Allocation run_rsbm(const MarketBids& bids, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<bool> data_used(dim_m(bids)), uav_used(dim_n(bids));
  Allocation out;
  std::vector<const SellerPairBid*> options;
  for (std::size_t l = 0; l < bids.size(); ++l) {
    options.clear();
    for (const auto& e : bids[l].entries()) {
      if (e.feasible && e.surplus() >= 0.0 && !data_used[e.data_seller_id] &&
          !uav_used[e.uav_seller_id]) {
        options.push_back(&e);
      }
    }
    if (options.empty()) continue;
    const SellerPairBid* pick = options[rng.index(options.size())];
    data_used[pick->data_seller_id] = uav_used[pick->uav_seller_id] = true;
    out.triples.push_back({l, pick->data_seller_id, pick->uav_seller_id});
    out.objective += pick->surplus();
  }
  return out;
}

void FogaConfig::validate() const {
  if (population_size < 1) throw ValidationError("foga.population_size: must be >= 1");
  if (generations < 1) throw ValidationError("foga.generations: must be >= 1");
  if (fragment_passes < 1) throw ValidationError("foga.fragment_passes: must be >= 1");
  if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) {
    throw ValidationError("foga.crossover_rate: must be in [0, 1]");
  }
  if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
    throw ValidationError("foga.mutation_rate: must be in [0, 1]");
  }
}

Allocation run_foga(const MarketBids& bids, const FogaConfig& config) {
  config.validate();
  return Foga(bids, config).run();
}

AuctionOutcome baseline_outcome(const MarketBids& bids, std::string mechanism,
                                Allocation allocation,
                                std::chrono::duration<double> elapsed) {
  AuctionOutcome out;
  out.mechanism = std::move(mechanism);
  out.allocation = std::move(allocation);
  finalize_outcome(bids, out);
  out.elapsed = elapsed;
  return out;
}

}  // namespace flmarket
