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

#include "hamlets/graph.hpp"

#include <algorithm>
#include <string>

#include "hamlets/errors.hpp"

namespace hamlets {

namespace {

std::string edge_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder builder(n);
  for (const auto& e : edges) builder.add_edge(e.u, e.v);
  return std::move(builder).build();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const Vertex other = &a == &adj_[u] ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::induced_subgraph(std::span<const Vertex> vertices) const {
  constexpr auto kAbsent = static_cast<Vertex>(-1);
  std::vector<Vertex> local(adj_.size(), kAbsent);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= adj_.size() || local[vertices[i]] != kAbsent) {
      throw ParameterError("induced_subgraph: invalid or repeated vertex " +
                           std::to_string(vertices[i]));
    }
    local[vertices[i]] = static_cast<Vertex>(i);
  }
  Graph sub(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    auto& row = sub.adj_[i];
    for (Vertex w : adj_[vertices[i]]) {
      if (local[w] != kAbsent) row.push_back(local[w]);
    }
    std::sort(row.begin(), row.end());
    sub.num_edges_ += row.size();
  }
  sub.num_edges_ /= 2;
  return sub;
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  const auto& row = adj_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

bool GraphBuilder::try_add_edge(Vertex u, Vertex v) {
  if (u >= adj_.size() || v >= adj_.size()) {
    throw ParameterError("edge " + edge_text(u, v) + " out of range for " +
                         std::to_string(adj_.size()) + " vertices");
  }
  if (u == v) return false;
  auto& row = adj_[u];
  auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it != row.end() && *it == v) return false;
  row.insert(it, v);
  auto& back = adj_[v];
  back.insert(std::lower_bound(back.begin(), back.end(), u), u);
  return true;
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
  if (!try_add_edge(u, v)) throw ParameterError("duplicate edge " + edge_text(u, v));
}

Graph GraphBuilder::build() && {
  Graph g(adj_.size());
  std::size_t degree_sum = 0;
  for (const auto& row : adj_) degree_sum += row.size();
  g.adj_ = std::move(adj_);
  g.num_edges_ = degree_sum / 2;
  return g;
}

}  // namespace hamlets
