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
#include <utility>
#include <vector>

#include "hamlets/graph.hpp"
#include "hamlets/partition.hpp"

namespace hamlets {

/// Bipartite graph of the edges running between two color classes. Only
/// vertices incident to at least one cross edge appear on either side.
struct BipartiteCrossGraph {
  using Index = std::uint32_t;

  std::vector<Vertex> left;
  std::vector<Vertex> right;
  /// (left index, right index), sorted, no duplicates.
  std::vector<std::pair<Index, Index>> edges;

  /// Per-left-index sorted lists of right indices.
  std::vector<std::vector<Index>> left_adjacency() const;
};

/// Edges with one endpoint colored `a` (left) and the other `b` (right).
/// Throws ParameterError if a == b or either color is >= p.k().
BipartiteCrossGraph cross_graph(const Graph& g, const Partition& p, Color a, Color b);

struct MatchingResult {
  /// Matched (left index, right index) pairs in ascending left index.
  std::vector<std::pair<BipartiteCrossGraph::Index, BipartiteCrossGraph::Index>> matching;
  /// Minimum vertex cover as vertex ids.
  std::vector<Vertex> cover;
  /// Same cover split by side, as indices into left / right.
  std::vector<BipartiteCrossGraph::Index> cover_left;
  std::vector<BipartiteCrossGraph::Index> cover_right;

  std::size_t size() const noexcept { return matching.size(); }
};

/// Maximum matching by Hopcroft-Karp plus the Konig minimum vertex cover
/// (left \ Z) u (right n Z), Z being everything reachable by alternating
/// paths from unmatched left vertices.
MatchingResult hopcroft_karp(const BipartiteCrossGraph& bg);

/// Maximum matching size by exhaustive search. Test oracle only; throws
/// OracleSizeError above kBruteForceMaxEdges edges.
inline constexpr std::size_t kBruteForceMaxEdges = 20;
std::size_t brute_force_matching(const BipartiteCrossGraph& bg);

}  // namespace hamlets
