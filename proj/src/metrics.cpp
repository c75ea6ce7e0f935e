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

#include "hamlets/metrics.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "hamlets/errors.hpp"
#include "hamlets/gf2.hpp"
#include "hamlets/matching.hpp"

namespace hamlets {

namespace {

void require_cover(const Graph& g, const Partition& p) {
  if (p.size() != g.num_vertices()) {
    throw ParameterError("partition covers " + std::to_string(p.size()) +
                         " vertices but the graph has " + std::to_string(g.num_vertices()));
  }
}

}  // namespace

std::size_t cut_edges(const Graph& g, const Partition& p) {
  require_cover(g, p);
  std::size_t cut = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && p.color(u) != p.color(v)) ++cut;
    }
  }
  return cut;
}

MetricsReport evaluate(const Graph& g, const Partition& p, EvalOptions options) {
  require_cover(g, p);
  MetricsReport report;
  const auto k = static_cast<Color>(p.k());
  for (Color a = 0; a < k; ++a) {
    for (Color b = a + 1; b < k; ++b) {
      report.pair_cut_edges[{a, b}] = 0;
      report.pair_matchings[{a, b}] = 0;
      report.pair_cutranks[{a, b}] = 0;
    }
  }
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      const Color cu = p.color(u);
      const Color cv = p.color(v);
      if (u < v && cu != cv) {
        ++report.cut_edges;
        ++report.pair_cut_edges[{std::min(cu, cv), std::max(cu, cv)}];
      }
    }
  }
  if (!options.matchings && !options.cut_ranks) return report;
  for (auto& [pair, edges] : report.pair_cut_edges) {
    if (edges == 0) continue;
    const auto bg = cross_graph(g, p, pair.first, pair.second);
    if (options.matchings) {
      const auto m = hopcroft_karp(bg).size();
      report.pair_matchings[pair] = m;
      report.matching_sum += m;
    }
    if (options.cut_ranks) {
      const auto r = rank_gf2(biadjacency(bg));
      report.pair_cutranks[pair] = r;
      report.cutrank_sum += r;
    }
  }
  return report;
}

Objective parse_objective(std::string_view name) {
  if (name == "edges" || name == "cut_edges") return Objective::kCutEdges;
  if (name == "matching" || name == "matching_sum") return Objective::kMatchingSum;
  if (name == "cutrank" || name == "cutrank_sum") return Objective::kCutRankSum;
  throw ParameterError("unknown objective '" + std::string(name) +
                       "' (expected edges, matching or cutrank)");
}

std::size_t objective_value(const Graph& g, const Partition& p, Objective objective) {
  switch (objective) {
    case Objective::kCutEdges:
      return cut_edges(g, p);
    case Objective::kMatchingSum:
      return evaluate(g, p, {.matchings = true, .cut_ranks = false}).matching_sum;
    case Objective::kCutRankSum:
      return evaluate(g, p, {.matchings = false, .cut_ranks = true}).cutrank_sum;
  }
  return 0;
}

void write_report(const MetricsReport& report, std::ostream& out, bool show_edges,
                  bool show_matchings, bool show_cutranks) {
  for (const auto& [pair, edges] : report.pair_cut_edges) {
    out << "pair " << pair.first << ' ' << pair.second;
    if (show_edges) out << " cut_edges " << edges;
    if (show_matchings) out << " matching " << report.pair_matchings.at(pair);
    if (show_cutranks) out << " cutrank " << report.pair_cutranks.at(pair);
    out << '\n';
  }
  if (show_edges) out << "cut_edges " << report.cut_edges << '\n';
  if (show_matchings) out << "matching_sum " << report.matching_sum << '\n';
  if (show_cutranks) out << "cutrank_sum " << report.cutrank_sum << '\n';
}

}  // namespace hamlets
