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
#include <span>
#include <vector>

namespace hamlets {

using Vertex = std::uint32_t;

/// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph over vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Throws ParameterError on self-loops, duplicate edges, or endpoints >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return adj_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  Graph induced_subgraph(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  std::vector<std::vector<Vertex>> adj_;
  std::size_t num_edges_ = 0;
};

/// Accumulates edges and rejects self-loops and duplicates as they arrive.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : adj_(n) {}

  std::size_t num_vertices() const noexcept { return adj_.size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Returns false (and adds nothing) for self-loops and duplicates.
  bool try_add_edge(Vertex u, Vertex v);
  /// Like try_add_edge but throws ParameterError instead of returning false.
  void add_edge(Vertex u, Vertex v);

  Graph build() &&;

 private:
  std::vector<std::vector<Vertex>> adj_;
};

}  // namespace hamlets
