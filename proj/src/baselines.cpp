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

#include "hamlets/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>

#include "hamlets/errors.hpp"
#include "hamlets/rng.hpp"

namespace hamlets {

namespace {

// D[v] = external - internal degree with respect to `side`.
std::vector<long> kl_differences(const Graph& g, const std::vector<bool>& side) {
  std::vector<long> d(g.num_vertices(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Vertex w : g.neighbors(v)) d[v] += side[w] != side[v] ? 1 : -1;
  }
  return d;
}

struct Swap {
  Vertex a;
  Vertex b;
  long gain;
};

// One KL pass; returns the total gain of the applied prefix (0 if none).
long kl_pass(const Graph& g, std::vector<bool>& side) {
  const std::size_t n = g.num_vertices();
  auto d = kl_differences(g, side);
  std::vector<bool> locked(n, false);
  std::vector<Vertex> group_a;
  std::vector<Vertex> group_b;
  std::vector<Swap> swaps;

  const auto by_d = [&](Vertex x, Vertex y) { return d[x] != d[y] ? d[x] > d[y] : x < y; };
  while (true) {
    group_a.clear();
    group_b.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (!locked[v]) (side[v] ? group_a : group_b).push_back(v);
    }
    if (group_a.empty() || group_b.empty()) break;
    std::sort(group_a.begin(), group_a.end(), by_d);
    std::sort(group_b.begin(), group_b.end(), by_d);

    // Gains are D[a] + D[b] - 2 c(a, b); scanning in decreasing D order lets
    // us stop once D[a] + D[b] cannot beat the best gain found.
    long best = std::numeric_limits<long>::min();
    Swap choice{group_a[0], group_b[0], 0};
    for (Vertex a : group_a) {
      if (best != std::numeric_limits<long>::min() && d[a] + d[group_b[0]] <= best) break;
      for (Vertex b : group_b) {
        if (best != std::numeric_limits<long>::min() && d[a] + d[b] <= best) break;
        const long gain = d[a] + d[b] - (g.has_edge(a, b) ? 2 : 0);
        if (gain > best) {
          best = gain;
          choice = {a, b, gain};
        }
      }
    }
    swaps.push_back(choice);
    locked[choice.a] = locked[choice.b] = true;
    for (Vertex pivot : {choice.a, choice.b}) {
      for (Vertex x : g.neighbors(pivot)) {
        if (!locked[x]) d[x] += side[x] == side[pivot] ? 2 : -2;
      }
    }
  }

  long running = 0;
  long best_total = 0;
  std::size_t best_prefix = 0;
  for (std::size_t i = 0; i < swaps.size(); ++i) {
    running += swaps[i].gain;
    if (running > best_total) {
      best_total = running;
      best_prefix = i + 1;
    }
  }
  for (std::size_t i = 0; i < best_prefix; ++i) {
    side[swaps[i].a] = false;
    side[swaps[i].b] = true;
  }
  return best_total;
}

void kl_recursive(const Graph& g, const std::vector<Vertex>& vertices, std::span<const std::size_t> caps,
                  Color first_color, std::uint64_t rng_seed, std::size_t max_passes,
                  std::vector<Color>& colors) {
  if (caps.size() == 1) {
    for (Vertex v : vertices) colors[v] = first_color;
    return;
  }
  const std::size_t left_parts = (caps.size() + 1) / 2;
  const auto left_size = std::accumulate(caps.begin(), caps.begin() + left_parts, std::size_t{0});
  const Graph sub = g.induced_subgraph(vertices);
  const auto side = kernighan_lin_bisection(sub, left_size, rng_seed, max_passes);
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  for (std::size_t i = 0; i < vertices.size(); ++i) (side[i] ? left : right).push_back(vertices[i]);
  kl_recursive(g, left, caps.subspan(0, left_parts), first_color, derive_seed(rng_seed, 1),
               max_passes, colors);
  kl_recursive(g, right, caps.subspan(left_parts), static_cast<Color>(first_color + left_parts),
               derive_seed(rng_seed, 2), max_passes, colors);
}

}  // namespace

std::vector<bool> kernighan_lin_bisection(const Graph& g, std::size_t size_true,
                                          std::uint64_t rng_seed, std::size_t max_passes) {
  const std::size_t n = g.num_vertices();
  if (size_true > n) throw ParameterError("KL: part size exceeds vertex count");
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::mt19937_64 rng(rng_seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<bool> side(n, false);
  for (std::size_t i = 0; i < size_true; ++i) side[order[i]] = true;
  for (std::size_t pass = 0; pass < max_passes; ++pass) {
    if (kl_pass(g, side) <= 0) break;
  }
  return side;
}

Partition kernighan_lin(const Graph& g, std::size_t k, std::uint64_t rng_seed, std::size_t max_passes) {
  const auto caps = balanced_capacities(g.num_vertices(), k);
  std::vector<Color> colors(g.num_vertices(), 0);
  std::vector<Vertex> all(g.num_vertices());
  std::iota(all.begin(), all.end(), Vertex{0});
  kl_recursive(g, all, caps, 0, rng_seed, max_passes, colors);
  return Partition(std::move(colors), caps);
}

Partition random_balanced_partition(std::size_t n, std::span<const std::size_t> capacities,
                                    std::uint64_t rng_seed) {
  std::vector<Color> colors;
  colors.reserve(n);
  for (std::size_t c = 0; c < capacities.size(); ++c) colors.insert(colors.end(), capacities[c], static_cast<Color>(c));
  if (colors.size() != n) throw ParameterError("capacities do not sum to n");
  std::mt19937_64 rng(rng_seed);
  std::shuffle(colors.begin(), colors.end(), rng);
  return Partition(std::move(colors), std::vector<std::size_t>(capacities.begin(), capacities.end()));
}

Partition random_sampling(const Graph& g, std::size_t k, std::size_t trials, std::uint64_t rng_seed,
                          Objective objective) {
  if (trials == 0) throw ParameterError("random sampling needs at least one trial");
  const auto caps = balanced_capacities(g.num_vertices(), k);
  std::optional<Partition> best;
  std::size_t best_value = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    auto candidate = random_balanced_partition(g.num_vertices(), caps, derive_seed(rng_seed, t));
    const auto value = objective_value(g, candidate, objective);
    if (!best || value < best_value) {
      best = std::move(candidate);
      best_value = value;
    }
  }
  return std::move(*best);
}

double count_balanced_colorings(std::size_t n, std::size_t k) {
  const auto caps = balanced_capacities(n, k);
  double log_count = std::lgamma(static_cast<double>(n) + 1.0);
  for (auto c : caps) log_count -= std::lgamma(static_cast<double>(c) + 1.0);
  // Equal-capacity colors are interchangeable.
  const std::size_t big = n % k;
  log_count -= std::lgamma(static_cast<double>(big) + 1.0);
  log_count -= std::lgamma(static_cast<double>(k - big) + 1.0);
  return std::exp(log_count);
}

namespace {

class Enumerator {
 public:
  Enumerator(const Graph& g, std::size_t k, Objective objective)
      : g_(g),
        objective_(objective),
        caps_(balanced_capacities(g.num_vertices(), k)),
        counts_(k, 0),
        colors_(g.num_vertices(), 0) {}

  ExhaustiveResult run() {
    assign(0);
    return {Partition(best_colors_, caps_), best_value_};
  }

 private:
  void assign(std::size_t v) {
    if (v == colors_.size()) {
      const Partition p(colors_, caps_);
      const auto value = objective_value(g_, p, objective_);
      if (best_colors_.empty() || value < best_value_) {
        best_value_ = value;
        best_colors_ = colors_;
      }
      return;
    }
    for (Color c = 0; c < caps_.size(); ++c) {
      if (counts_[c] == caps_[c]) continue;
      // An unused color may only be opened after every lower color of the
      // same capacity is in use.
      if (counts_[c] == 0 && c > 0 && caps_[c - 1] == caps_[c] && counts_[c - 1] == 0) continue;
      colors_[v] = c;
      ++counts_[c];
      assign(v + 1);
      --counts_[c];
    }
  }

  const Graph& g_;
  Objective objective_;
  std::vector<std::size_t> caps_;
  std::vector<std::size_t> counts_;
  std::vector<Color> colors_;
  std::vector<Color> best_colors_;
  std::size_t best_value_ = 0;
};

}  // namespace

ExhaustiveResult exhaustive_optimum(const Graph& g, std::size_t k, Objective objective) {
  const double count = count_balanced_colorings(g.num_vertices(), k);
  if (count > kExhaustiveMaxColorings) {
    throw OracleSizeError("exhaustive_optimum: about " + std::to_string(static_cast<long long>(count)) +
                          " colorings exceeds the limit");
  }
  return Enumerator(g, k, objective).run();
}

}  // namespace hamlets
