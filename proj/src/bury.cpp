// Copyright 2026 The Hamlets Authors
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

#include "hamlets/bury.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "hamlets/errors.hpp"
#include "hamlets/rng.hpp"

namespace hamlets {

BuryState::BuryState(const Graph& g, std::size_t budget, std::span<const Vertex> precolored,
                     std::span<const std::uint32_t> tie_priority)
    : g_(&g),
      budget_(budget),
      weight_(g.num_vertices(), 0),
      colored_(g.num_vertices(), false),
      colored_neighbors_(g.num_vertices(), 0),
      rank_(g.num_vertices()) {
  const std::size_t n = g.num_vertices();
  if (!tie_priority.empty()) {
    if (tie_priority.size() != n) throw ParameterError("tie priority must have one entry per vertex");
    rank_.assign(tie_priority.begin(), tie_priority.end());
  } else {
    std::iota(rank_.begin(), rank_.end(), 0u);
  }
  for (Vertex v : precolored) {
    if (v >= n) throw ParameterError("precolored vertex " + std::to_string(v) + " out of range");
    if (!colored_[v]) {
      colored_[v] = true;
      ++num_colored_;
    }
  }
  if (budget > n - num_colored_) {
    throw ParameterError("bury budget " + std::to_string(budget) + " exceeds the " +
                         std::to_string(n - num_colored_) + " uncolored vertices");
  }
  for (Vertex v = 0; v < n; ++v) {
    weight_[v] = colored_[v] ? 0 : 1;
    for (Vertex w : g.neighbors(v)) {
      if (colored_[w]) {
        ++colored_neighbors_[v];
      } else {
        ++weight_[v];
      }
    }
    relink(v);
  }
}

void BuryState::unlink(Vertex v) {
  const Key k = key(v);
  unburied_.erase(k);
  unburied_frontier_.erase(k);
  uncolored_.erase(k);
  uncolored_frontier_.erase(k);
}

void BuryState::relink(Vertex v) {
  const Key k = key(v);
  const bool touches_color = colored_[v] || colored_neighbors_[v] > 0;
  if (!buried(v)) {
    unburied_.insert(k);
    if (touches_color) unburied_frontier_.insert(k);
  }
  if (!colored_[v]) {
    uncolored_.insert(k);
    if (colored_neighbors_[v] > 0) uncolored_frontier_.insert(k);
  }
}

void BuryState::mark_colored(Vertex u) {
  const auto nbrs = g_->neighbors(u);
  unlink(u);
  for (Vertex w : nbrs) unlink(w);

  colored_[u] = true;
  ++num_colored_;
  if (!buried(u)) --weight_[u];
  for (Vertex w : nbrs) {
    ++colored_neighbors_[w];
    if (!buried(w)) --weight_[w];
  }

  relink(u);
  for (Vertex w : nbrs) relink(w);
}

void BuryState::bury(Vertex v) {
  if (buried(v)) throw ParameterError("vertex " + std::to_string(v) + " is already buried");
  const std::size_t cost = weight_[v];
  if (cost > budget_) {
    throw ParameterError("burying vertex " + std::to_string(v) + " costs " + std::to_string(cost) +
                         " but only " + std::to_string(budget_) + " remain");
  }
  if (!colored_[v]) mark_colored(v);
  for (Vertex w : g_->neighbors(v)) {
    if (!colored_[w]) mark_colored(w);
  }
  budget_ -= cost;
  unlink(v);
  weight_[v] = kBuried;
  relink(v);
}

void BuryState::color_single(Vertex v) {
  if (colored_[v]) throw ParameterError("vertex " + std::to_string(v) + " is already colored");
  if (budget_ == 0) throw ParameterError("no budget left to color vertex " + std::to_string(v));
  mark_colored(v);
  --budget_;
}

std::optional<Vertex> BuryState::cheapest_unburied(bool frontier_only) const {
  const auto& set = frontier_only ? unburied_frontier_ : unburied_;
  if (set.empty()) return std::nullopt;
  return std::get<2>(*set.begin());
}

std::optional<Vertex> BuryState::cheapest_uncolored(bool frontier_only) const {
  const auto& set = frontier_only ? uncolored_frontier_ : uncolored_;
  if (set.empty()) return std::nullopt;
  return std::get<2>(*set.begin());
}

std::size_t BuryState::recount_weight(Vertex v) const {
  if (buried(v)) return kBuried;
  std::size_t w = colored_[v] ? 0 : 1;
  for (Vertex u : g_->neighbors(v)) {
    if (!colored_[u]) ++w;
  }
  return w;
}

std::vector<Vertex> BuryState::colored_vertices() const {
  std::vector<Vertex> out;
  out.reserve(num_colored_);
  for (Vertex v = 0; v < colored_.size(); ++v) {
    if (colored_[v]) out.push_back(v);
  }
  return out;
}

namespace {

std::vector<std::uint32_t> tie_ranks(std::size_t n, std::uint64_t rng_seed, BuryOptions options) {
  if (!options.randomize_ties) return {};
  std::vector<std::uint32_t> ranks(n);
  std::iota(ranks.begin(), ranks.end(), 0u);
  std::mt19937_64 rng(rng_seed);
  std::shuffle(ranks.begin(), ranks.end(), rng);
  return ranks;
}

std::vector<Vertex> run_bury(BuryState& state, bool frontier_only) {
  while (true) {
    // Zero-cost burials are taken even once the budget is spent; they never
    // change the colored set.
    if (const auto v = state.cheapest_unburied(frontier_only);
        v && state.weight(*v) <= state.remaining()) {
      state.bury(*v);
      continue;
    }
    if (state.remaining() == 0) break;
    auto single = state.cheapest_uncolored(true);
    if (!single) single = state.cheapest_uncolored(false);
    state.color_single(*single);
  }
  return state.colored_vertices();
}

void require_capacities(const Graph& g, std::span<const std::size_t> capacities) {
  if (capacities.empty()) throw ParameterError("need at least one capacity");
  const auto total = std::accumulate(capacities.begin(), capacities.end(), std::size_t{0});
  if (total != g.num_vertices()) {
    throw ParameterError("capacities sum to " + std::to_string(total) + " but the graph has " +
                         std::to_string(g.num_vertices()) + " vertices");
  }
}

template <typename Bipartition>
Partition repeated_bipartition(const Graph& g, std::span<const std::size_t> capacities,
                               Bipartition&& bipartition) {
  require_capacities(g, capacities);
  const std::size_t k = capacities.size();
  std::vector<Color> colors(g.num_vertices(), static_cast<Color>(k - 1));
  std::vector<Vertex> remaining(g.num_vertices());
  std::iota(remaining.begin(), remaining.end(), Vertex{0});
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const Graph sub = g.induced_subgraph(remaining);
    const auto chosen = bipartition(sub, capacities[i], i);
    std::vector<bool> taken(remaining.size(), false);
    for (Vertex local : chosen) {
      taken[local] = true;
      colors[remaining[local]] = static_cast<Color>(i);
    }
    std::vector<Vertex> rest;
    rest.reserve(remaining.size() - chosen.size());
    for (std::size_t j = 0; j < remaining.size(); ++j) {
      if (!taken[j]) rest.push_back(remaining[j]);
    }
    remaining = std::move(rest);
  }
  return Partition(std::move(colors), std::vector<std::size_t>(capacities.begin(), capacities.end()));
}

}  // namespace

std::vector<Vertex> bury_bipartition(const Graph& g, std::size_t budget, std::uint64_t rng_seed,
                                     std::span<const Vertex> precolored, BuryOptions options) {
  const auto ranks = tie_ranks(g.num_vertices(), rng_seed, options);
  BuryState state(g, budget, precolored, ranks);
  return run_bury(state, false);
}

std::vector<Vertex> bury_seeding(const Graph& g, std::size_t budget, Vertex seed_vertex,
                                 std::uint64_t rng_seed, BuryOptions options) {
  if (budget == 0) return {};
  if (seed_vertex >= g.num_vertices()) {
    throw ParameterError("seed vertex " + std::to_string(seed_vertex) + " out of range");
  }
  if (budget > g.num_vertices()) {
    throw ParameterError("bury budget " + std::to_string(budget) + " exceeds the " +
                         std::to_string(g.num_vertices()) + " vertices");
  }
  const auto ranks = tie_ranks(g.num_vertices(), rng_seed, options);
  const Vertex seed[] = {seed_vertex};
  BuryState state(g, budget - 1, seed, ranks);
  return run_bury(state, true);
}

Partition bury_kpartition(const Graph& g, std::span<const std::size_t> capacities,
                          std::uint64_t rng_seed, BuryOptions options) {
  return repeated_bipartition(g, capacities, [&](const Graph& sub, std::size_t cap, std::size_t i) {
    return bury_bipartition(sub, cap, derive_seed(rng_seed, i), {}, options);
  });
}

Partition bury_seeding_kpartition(const Graph& g, std::span<const std::size_t> capacities,
                                  Vertex seed_vertex, std::uint64_t rng_seed,
                                  BuryOptions options) {
  if (seed_vertex >= g.num_vertices()) {
    throw ParameterError("seed vertex " + std::to_string(seed_vertex) + " out of range");
  }
  return repeated_bipartition(g, capacities, [&](const Graph& sub, std::size_t cap, std::size_t i) {
    Vertex seed = 0;
    if (i == 0) {
      seed = seed_vertex;
    } else {
      for (Vertex v = 1; v < sub.num_vertices(); ++v) {
        if (sub.degree(v) < sub.degree(seed)) seed = v;
      }
    }
    return bury_seeding(sub, cap, seed, derive_seed(rng_seed, i), options);
  });
}

}  // namespace hamlets
