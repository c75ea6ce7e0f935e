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

#include "hamlets/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "hamlets/errors.hpp"

namespace hamlets {

using Index = BipartiteCrossGraph::Index;

std::vector<std::vector<Index>> BipartiteCrossGraph::left_adjacency() const {
  std::vector<std::vector<Index>> adj(left.size());
  for (const auto& [l, r] : edges) adj[l].push_back(r);
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

BipartiteCrossGraph cross_graph(const Graph& g, const Partition& p, Color a, Color b) {
  if (a == b || a >= p.k() || b >= p.k()) {
    throw ParameterError("cross_graph: need two distinct colors below k=" + std::to_string(p.k()));
  }
  if (p.size() != g.num_vertices()) {
    throw ParameterError("cross_graph: partition covers " + std::to_string(p.size()) +
                         " vertices, graph has " + std::to_string(g.num_vertices()));
  }
  constexpr auto kNone = std::numeric_limits<Index>::max();
  BipartiteCrossGraph bg;
  std::vector<Index> right_index(g.num_vertices(), kNone);
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (p.color(u) != b) continue;
    for (Vertex w : g.neighbors(u)) {
      if (p.color(w) == a) {
        right_index[u] = static_cast<Index>(bg.right.size());
        bg.right.push_back(u);
        break;
      }
    }
  }
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (p.color(u) != a) continue;
    bool any = false;
    for (Vertex w : g.neighbors(u)) {
      if (p.color(w) != b) continue;
      if (!any) {
        bg.left.push_back(u);
        any = true;
      }
      bg.edges.emplace_back(static_cast<Index>(bg.left.size() - 1), right_index[w]);
    }
  }
  return bg;
}

namespace {

constexpr auto kFree = std::numeric_limits<Index>::max();
constexpr auto kInf = std::numeric_limits<std::uint32_t>::max();

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteCrossGraph& bg)
      : adj_(bg.left_adjacency()),
        match_left_(bg.left.size(), kFree),
        match_right_(bg.right.size(), kFree),
        dist_(bg.left.size()),
        next_edge_(bg.left.size()) {}

  void run() {
    while (bfs()) {
      std::fill(next_edge_.begin(), next_edge_.end(), 0);
      for (Index l = 0; l < adj_.size(); ++l) {
        if (match_left_[l] == kFree) dfs(l);
      }
    }
  }

  const std::vector<std::vector<Index>>& adj() const { return adj_; }
  const std::vector<Index>& match_left() const { return match_left_; }
  const std::vector<Index>& match_right() const { return match_right_; }

 private:
  // Layers free left vertices at distance 0; true if some free right vertex
  // is reachable.
  bool bfs() {
    std::queue<Index> queue;
    for (Index l = 0; l < adj_.size(); ++l) {
      if (match_left_[l] == kFree) {
        dist_[l] = 0;
        queue.push(l);
      } else {
        dist_[l] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const Index l = queue.front();
      queue.pop();
      for (Index r : adj_[l]) {
        const Index next = match_right_[r];
        if (next == kFree) {
          found = true;
        } else if (dist_[next] == kInf) {
          dist_[next] = dist_[l] + 1;
          queue.push(next);
        }
      }
    }
    return found;
  }

  bool dfs(Index l) {
    for (auto& i = next_edge_[l]; i < adj_[l].size(); ++i) {
      const Index r = adj_[l][i];
      const Index next = match_right_[r];
      if (next == kFree || (dist_[next] == dist_[l] + 1 && dfs(next))) {
        match_left_[l] = r;
        match_right_[r] = l;
        ++i;
        return true;
      }
    }
    dist_[l] = kInf;
    return false;
  }

  std::vector<std::vector<Index>> adj_;
  std::vector<Index> match_left_;
  std::vector<Index> match_right_;
  std::vector<std::uint32_t> dist_;
  std::vector<std::size_t> next_edge_;
};

}  // namespace

MatchingResult hopcroft_karp(const BipartiteCrossGraph& bg) {
  HopcroftKarp hk(bg);
  hk.run();
  const auto& adj = hk.adj();
  const auto& match_left = hk.match_left();
  const auto& match_right = hk.match_right();

  MatchingResult result;
  for (Index l = 0; l < match_left.size(); ++l) {
    if (match_left[l] != kFree) result.matching.emplace_back(l, match_left[l]);
  }

  // Alternating reachability from unmatched left vertices.
  std::vector<bool> z_left(bg.left.size(), false);
  std::vector<bool> z_right(bg.right.size(), false);
  std::queue<Index> queue;
  for (Index l = 0; l < match_left.size(); ++l) {
    if (match_left[l] == kFree) {
      z_left[l] = true;
      queue.push(l);
    }
  }
  while (!queue.empty()) {
    const Index l = queue.front();
    queue.pop();
    for (Index r : adj[l]) {
      if (z_right[r] || match_left[l] == r) continue;
      z_right[r] = true;
      const Index next = match_right[r];
      if (next != kFree && !z_left[next]) {
        z_left[next] = true;
        queue.push(next);
      }
    }
  }
  for (Index l = 0; l < bg.left.size(); ++l) {
    if (!z_left[l]) result.cover_left.push_back(l);
  }
  for (Index r = 0; r < bg.right.size(); ++r) {
    if (z_right[r]) result.cover_right.push_back(r);
  }
  for (Index l : result.cover_left) result.cover.push_back(bg.left[l]);
  for (Index r : result.cover_right) result.cover.push_back(bg.right[r]);
  std::sort(result.cover.begin(), result.cover.end());
  return result;
}

namespace {

std::size_t best_matching(const std::vector<std::pair<Index, Index>>& edges, std::size_t next,
                          std::vector<bool>& used_left, std::vector<bool>& used_right) {
  if (next == edges.size()) return 0;
  // Skip edge `next`.
  std::size_t best = best_matching(edges, next + 1, used_left, used_right);
  const auto [l, r] = edges[next];
  if (!used_left[l] && !used_right[r]) {
    used_left[l] = used_right[r] = true;
    best = std::max(best, 1 + best_matching(edges, next + 1, used_left, used_right));
    used_left[l] = used_right[r] = false;
  }
  return best;
}

}  // namespace

std::size_t brute_force_matching(const BipartiteCrossGraph& bg) {
  if (bg.edges.size() > kBruteForceMaxEdges) {
    throw OracleSizeError("brute_force_matching: " + std::to_string(bg.edges.size()) +
                          " edges exceeds the limit of " + std::to_string(kBruteForceMaxEdges));
  }
  std::vector<bool> used_left(bg.left.size(), false);
  std::vector<bool> used_right(bg.right.size(), false);
  return best_matching(bg.edges, 0, used_left, used_right);
}

}  // namespace hamlets
