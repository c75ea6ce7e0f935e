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
#include <iosfwd>
#include <map>
#include <string_view>
#include <utility>

#include "hamlets/graph.hpp"
#include "hamlets/partition.hpp"

namespace hamlets {

using ColorPair = std::pair<Color, Color>;

/// Per-pair and summed cost figures of one (graph, partition). Every pair
/// a < b is present in the maps, including pairs with no cross edges.
struct MetricsReport {
  std::size_t cut_edges = 0;
  std::map<ColorPair, std::size_t> pair_cut_edges;
  std::map<ColorPair, std::size_t> pair_matchings;
  std::map<ColorPair, std::size_t> pair_cutranks;
  std::size_t matching_sum = 0;
  std::size_t cutrank_sum = 0;

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

struct EvalOptions {
  bool matchings = true;
  bool cut_ranks = true;
};

/// Edges whose endpoints have different colors. Throws ParameterError if
/// the partition does not cover exactly the graph's vertices.
std::size_t cut_edges(const Graph& g, const Partition& p);

MetricsReport evaluate(const Graph& g, const Partition& p, EvalOptions options = {});

enum class Objective { kCutEdges, kMatchingSum, kCutRankSum };

/// Parses "edges" / "matching" / "cutrank"; throws ParameterError otherwise.
Objective parse_objective(std::string_view name);

/// Only computes what the objective needs.
std::size_t objective_value(const Graph& g, const Partition& p, Objective objective);

/// Human-readable dump: one "pair a b ..." line per color pair followed by
/// the totals.
void write_report(const MetricsReport& report, std::ostream& out, bool show_edges = true,
                  bool show_matchings = true, bool show_cutranks = true);

}  // namespace hamlets
