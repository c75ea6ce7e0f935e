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

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <tuple>
#include <vector>

#include "hamlets/graph.hpp"
#include "hamlets/partition.hpp"

namespace hamlets {

/// Working state of the bury heuristic on one graph.
///
/// weight(v) is the number of uncolored vertices in the closed neighborhood
/// of v, i.e. what it costs to bury v, or kBuried once v has been buried.
/// The weights are maintained incrementally as vertices get colored.
class BuryState {
 public:
  static constexpr std::size_t kBuried = std::numeric_limits<std::size_t>::max();

  /// `budget` is the number of vertices still to color; `precolored` start
  /// out colored for free. `tie_priority`, if given, holds a distinct rank
  /// per vertex used to break weight ties (lower first); the default is the
  /// vertex index.
  BuryState(const Graph& g, std::size_t budget, std::span<const Vertex> precolored = {},
            std::span<const std::uint32_t> tie_priority = {});

  const Graph& graph() const noexcept { return *g_; }
  std::size_t weight(Vertex v) const { return weight_[v]; }
  bool colored(Vertex v) const { return colored_[v]; }
  bool buried(Vertex v) const { return weight_[v] == kBuried; }
  std::size_t remaining() const noexcept { return budget_; }
  std::size_t num_colored() const noexcept { return num_colored_; }

  /// Colors every uncolored vertex of N[v], spends weight(v) and marks v
  /// buried. Throws ParameterError if v is buried or weight(v) > remaining().
  void bury(Vertex v);
  /// Colors one uncolored vertex for a cost of 1.
  void color_single(Vertex v);

  /// Minimum-weight unburied vertex, optionally restricted to the frontier
  /// (vertices whose closed neighborhood contains a colored vertex).
  std::optional<Vertex> cheapest_unburied(bool frontier_only) const;
  /// Minimum-weight uncolored vertex, optionally restricted to those with a
  /// colored neighbor.
  std::optional<Vertex> cheapest_uncolored(bool frontier_only) const;

  /// From-scratch weight of v, for checking the incremental bookkeeping.
  std::size_t recount_weight(Vertex v) const;

  std::vector<Vertex> colored_vertices() const;

 private:
  using Key = std::tuple<std::size_t, std::uint32_t, Vertex>;  // weight, tie rank, vertex

  Key key(Vertex v) const { return {weight_[v], rank_[v], v}; }
  void unlink(Vertex v);
  void relink(Vertex v);
  void mark_colored(Vertex u);

  const Graph* g_;
  std::size_t budget_;
  std::size_t num_colored_ = 0;
  std::vector<std::size_t> weight_;
  std::vector<bool> colored_;
  std::vector<std::uint32_t> colored_neighbors_;
  std::vector<std::uint32_t> rank_;
  std::set<Key> unburied_;
  std::set<Key> unburied_frontier_;
  std::set<Key> uncolored_;
  std::set<Key> uncolored_frontier_;
};

struct BuryOptions {
  /// Break weight ties by a seeded random vertex order instead of index.
  bool randomize_ties = false;
};

/// Colors exactly `budget` vertices beyond `precolored` and returns all
/// colored vertices, sorted. The cheapest affordable vertex is buried while
/// one exists; after that, single vertices are colored, preferring ones
/// next to the colored region. Throws ParameterError if budget exceeds the
/// number of uncolored vertices.
std::vector<Vertex> bury_bipartition(const Graph& g, std::size_t budget, std::uint64_t rng_seed,
                                     std::span<const Vertex> precolored = {},
                                     BuryOptions options = {});

/// Bury variant that starts from `seed_vertex` colored (it counts towards
/// `budget`) and only considers frontier vertices when choosing what to
/// bury, so the colored region grows outward from the seed.
std::vector<Vertex> bury_seeding(const Graph& g, std::size_t budget, Vertex seed_vertex,
                                 std::uint64_t rng_seed, BuryOptions options = {});

/// k-way partition by repeated bipartition: color i takes capacities[i]
/// vertices out of the still-uncolored induced subgraph, the last color gets
/// whatever is left. Capacities may differ from each other. Throws
/// ParameterError unless the capacities sum to n.
Partition bury_kpartition(const Graph& g, std::span<const std::size_t> capacities,
                          std::uint64_t rng_seed, BuryOptions options = {});

/// As bury_kpartition with bury_seeding for every color. Color 0 grows from
/// `seed_vertex`; later colors grow from the lowest-index vertex of minimum
/// degree in the remaining subgraph.
Partition bury_seeding_kpartition(const Graph& g, std::span<const std::size_t> capacities,
                                  Vertex seed_vertex, std::uint64_t rng_seed,
                                  BuryOptions options = {});

}  // namespace hamlets
