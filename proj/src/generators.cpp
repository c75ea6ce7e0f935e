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

#include "hamlets/generators.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "hamlets/errors.hpp"

namespace hamlets {

Graph grid_graph(std::size_t rows, std::size_t cols) {
  GraphBuilder builder(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const auto v = static_cast<Vertex>(r * cols + c);
      if (c + 1 < cols) builder.add_edge(v, v + 1);
      if (r + 1 < rows) builder.add_edge(v, static_cast<Vertex>(v + cols));
    }
  }
  return std::move(builder).build();
}

std::pair<std::size_t, std::size_t> near_square_dims(std::size_t n) {
  if (n == 0) throw ParameterError("near_square_dims: n must be positive");
  std::size_t rows = 1;
  for (std::size_t r = 1; r * r <= n; ++r) {
    if (n % r == 0) rows = r;
  }
  return {rows, n / rows};
}

Graph near_square_grid(std::size_t n) {
  const auto [rows, cols] = near_square_dims(n);
  return grid_graph(rows, cols);
}

namespace {

constexpr int kMaxRegularRestarts = 1000;

// One attempt at a random pairing; false means it got stuck and must restart.
bool try_random_pairing(std::size_t n, std::size_t degree, std::mt19937_64& rng,
                        GraphBuilder& builder) {
  std::vector<Vertex> stubs;
  stubs.reserve(n * degree);
  for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), degree, v);

  while (!stubs.empty()) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<Vertex> leftover;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      if (!builder.try_add_edge(stubs[i], stubs[i + 1])) {
        leftover.push_back(stubs[i]);
        leftover.push_back(stubs[i + 1]);
      }
    }
    if (leftover.empty()) return true;

    // Continue only if some pair of leftover stubs could still form an edge.
    std::vector<Vertex> distinct = leftover;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    bool suitable = false;
    for (std::size_t i = 0; i < distinct.size() && !suitable; ++i) {
      for (std::size_t j = i + 1; j < distinct.size(); ++j) {
        if (!builder.has_edge(distinct[i], distinct[j])) {
          suitable = true;
          break;
        }
      }
    }
    if (!suitable) return false;
    stubs = std::move(leftover);
  }
  return true;
}

}  // namespace

Graph random_regular_graph(std::size_t n, std::size_t degree, std::uint64_t seed) {
  if ((n * degree) % 2 != 0) {
    throw ParameterError("random regular graph: n * d must be even (n=" + std::to_string(n) +
                         ", d=" + std::to_string(degree) + ")");
  }
  if (degree >= n && !(n == 0 && degree == 0)) {
    throw ParameterError("random regular graph: need d < n (n=" + std::to_string(n) +
                         ", d=" + std::to_string(degree) + ")");
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxRegularRestarts; ++attempt) {
    GraphBuilder builder(n);
    if (try_random_pairing(n, degree, rng, builder)) return std::move(builder).build();
  }
  throw ParameterError("random regular graph: no simple pairing found after " +
                       std::to_string(kMaxRegularRestarts) + " restarts");
}

Graph erdos_renyi_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("erdos_renyi_graph: p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  GraphBuilder builder(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) builder.add_edge(u, v);
    }
  }
  return std::move(builder).build();
}

Graph path_graph(std::size_t n) {
  GraphBuilder builder(n);
  for (Vertex v = 1; v < n; ++v) builder.add_edge(v - 1, v);
  return std::move(builder).build();
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ParameterError("cycle_graph: need n >= 3");
  GraphBuilder builder(n);
  for (Vertex v = 1; v < n; ++v) builder.add_edge(v - 1, v);
  builder.add_edge(static_cast<Vertex>(n - 1), 0);
  return std::move(builder).build();
}

Graph complete_graph(std::size_t n) {
  GraphBuilder builder(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) builder.add_edge(u, v);
  }
  return std::move(builder).build();
}

Graph star_graph(std::size_t leaves) {
  GraphBuilder builder(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) builder.add_edge(0, v);
  return std::move(builder).build();
}

}  // namespace hamlets
