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

#include <doctest.h>

#include <random>
#include <sstream>

#include "hamlets/errors.hpp"
#include "hamlets/generators.hpp"
#include "hamlets/gf2.hpp"
#include "hamlets/matching.hpp"
#include "hamlets/metrics.hpp"
#include "oracles.hpp"

using namespace hamlets;

namespace {

Partition vertical_bands(std::size_t rows, std::size_t cols, std::size_t k) {
  std::vector<Color> colors(rows * cols);
  const std::size_t width = cols / k;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) colors[r * cols + c] = static_cast<Color>(c / width);
  }
  return Partition(std::move(colors), k);
}

}  // namespace

TEST_CASE("cut edges") {
  CHECK(cut_edges(path_graph(2), Partition({0, 1}, 2)) == 1);
  CHECK(cut_edges(complete_graph(4), Partition({0, 0, 1, 1}, 2)) == 4);
  CHECK(cut_edges(grid_graph(6, 6), vertical_bands(6, 6, 3)) == 12);
  CHECK(cut_edges(grid_graph(6, 6), Partition::monochrome(36)) == 0);
}

TEST_CASE("metrics on small named cases") {
  SUBCASE("single edge") {
    const auto r = evaluate(path_graph(2), Partition({0, 1}, 2));
    CHECK(r.cut_edges == 1);
    CHECK(r.matching_sum == 1);
    CHECK(r.cutrank_sum == 1);
  }
  SUBCASE("path cut in the middle") {
    const auto r = evaluate(path_graph(10), Partition({0, 0, 0, 0, 0, 1, 1, 1, 1, 1}, 2));
    CHECK(r.cut_edges == 1);
    CHECK(r.matching_sum == 1);
    CHECK(r.cutrank_sum == 1);
  }
  SUBCASE("K4 halves") {
    const auto r = evaluate(complete_graph(4), Partition({0, 0, 1, 1}, 2));
    CHECK(r.cut_edges == 4);
    CHECK(r.matching_sum == 2);
    CHECK(r.cutrank_sum == 1);
  }
  SUBCASE("alternating path") {
    const auto r = evaluate(path_graph(4), Partition({0, 1, 0, 1}, 2));
    CHECK(r.cut_edges == 3);
    CHECK(r.matching_sum == 2);
    CHECK(r.cutrank_sum == 2);
  }
  SUBCASE("grid bands") {
    const auto r = evaluate(grid_graph(6, 6), vertical_bands(6, 6, 3));
    CHECK(r.cut_edges == 12);
    CHECK(r.matching_sum == 12);
    CHECK(r.cutrank_sum == 12);
    CHECK(r.pair_cut_edges.at({0, 2}) == 0);
    CHECK(r.pair_matchings.at({0, 1}) == 6);
  }
}

TEST_CASE("every color pair is reported") {
  const auto r = evaluate(path_graph(5), Partition({0, 0, 0, 0, 0}, std::vector<std::size_t>{5, 0, 0}));
  CHECK(r.pair_cut_edges.size() == 3);
  CHECK(r.pair_matchings.size() == 3);
  CHECK(r.pair_cutranks.size() == 3);
  CHECK(r.matching_sum == 0);
}

TEST_CASE("options skip expensive metrics") {
  const auto g = grid_graph(4, 4);
  const Partition p = vertical_bands(4, 4, 2);
  const auto edges_only = evaluate(g, p, {.matchings = false, .cut_ranks = false});
  CHECK(edges_only.cut_edges == 4);
  for (const auto& [pair, m] : edges_only.pair_matchings) CHECK(m == 0);
  CHECK(edges_only.cutrank_sum == 0);
  CHECK(edges_only.matching_sum == 0);
}

TEST_CASE("pair metrics agree with the underlying kernels") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = erdos_renyi_graph(50, 0.1, rng());
    const auto p = testing::random_coloring(50, 4, rng);
    const auto r = evaluate(g, p);
    std::size_t total = 0;
    for (const auto& [pair, m] : r.pair_matchings) {
      const auto bg = cross_graph(g, p, pair.first, pair.second);
      CHECK(m == hopcroft_karp(bg).size());
      CHECK(r.pair_cutranks.at(pair) == rank_gf2(biadjacency(bg)));
      CHECK(r.pair_cut_edges.at(pair) == bg.edges.size());
      total += m;
    }
    CHECK(total == r.matching_sum);
  }
}

TEST_CASE("metric ordering") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = erdos_renyi_graph(30, 0.2, rng());
    const auto p = testing::random_coloring(30, 2 + trial % 4, rng);
    const auto r = evaluate(g, p);
    CHECK(r.cutrank_sum <= r.matching_sum);
    CHECK(r.matching_sum <= r.cut_edges);
  }
}

TEST_CASE("objectives") {
  CHECK(parse_objective("edges") == Objective::kCutEdges);
  CHECK(parse_objective("matching") == Objective::kMatchingSum);
  CHECK(parse_objective("cutrank") == Objective::kCutRankSum);
  CHECK_THROWS_AS(parse_objective("volume"), ParameterError);
  const auto g = complete_graph(4);
  const Partition p({0, 0, 1, 1}, 2);
  CHECK(objective_value(g, p, Objective::kCutEdges) == 4);
  CHECK(objective_value(g, p, Objective::kMatchingSum) == 2);
  CHECK(objective_value(g, p, Objective::kCutRankSum) == 1);
}

TEST_CASE("report text") {
  std::ostringstream out;
  write_report(evaluate(complete_graph(4), Partition({0, 0, 1, 1}, 2)), out);
  CHECK(out.str() ==
        "pair 0 1 cut_edges 4 matching 2 cutrank 1\n"
        "cut_edges 4\nmatching_sum 2\ncutrank_sum 1\n");
}

TEST_CASE("partition size mismatch") {
  CHECK_THROWS_AS(evaluate(path_graph(3), Partition({0, 1}, 2)), ParameterError);
}
