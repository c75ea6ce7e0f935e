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
#include "hamlets/io.hpp"
#include "oracles.hpp"

using namespace hamlets;

namespace {

bool is_symmetric_simple(const Graph& g) {
  std::size_t degree_sum = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    degree_sum += g.degree(u);
    for (Vertex v : g.neighbors(u)) {
      if (v == u || !g.has_edge(v, u)) return false;
    }
  }
  return degree_sum == 2 * g.num_edges();
}

std::string metis_text(const Graph& g) {
  std::ostringstream out;
  write_metis_graph(g, out);
  return out.str();
}

}  // namespace

TEST_CASE("graph construction rejects loops and duplicates") {
  const Edge loop[] = {{1, 1}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), ParameterError);
  const Edge dup[] = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph::from_edges(3, dup), ParameterError);
  const Edge far[] = {{0, 5}};
  CHECK_THROWS_AS(Graph::from_edges(3, far), ParameterError);

  const Edge ok[] = {{2, 0}, {0, 1}};
  const auto g = Graph::from_edges(3, ok);
  CHECK(g.num_edges() == 2);
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  CHECK_FALSE(g.has_edge(1, 2));
  CHECK(is_symmetric_simple(g));
}

TEST_CASE("induced subgraph relabels in the given order") {
  const auto g = path_graph(5);
  const Vertex keep[] = {4, 3, 1};
  const auto sub = g.induced_subgraph(keep);
  CHECK(sub.num_vertices() == 3);
  CHECK(sub.num_edges() == 1);
  CHECK(sub.has_edge(0, 1));
}

TEST_CASE("grid generator") {
  SUBCASE("1x1 is a single vertex") {
    const auto g = grid_graph(1, 1);
    CHECK(g.num_vertices() == 1);
    CHECK(g.num_edges() == 0);
  }
  SUBCASE("2x3 has 7 edges") {
    const auto g = grid_graph(2, 3);
    CHECK(g.num_vertices() == 6);
    CHECK(g.num_edges() == 7);
  }
  SUBCASE("4x4 degree profile") {
    const auto g = grid_graph(4, 4);
    int deg[5] = {};
    for (Vertex v = 0; v < 16; ++v) ++deg[g.degree(v)];
    CHECK(deg[2] == 4);
    CHECK(deg[3] == 8);
    CHECK(deg[4] == 4);
  }
  SUBCASE("index layout is row-major") {
    const auto g = grid_graph(3, 5);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(0, 5));
    CHECK_FALSE(g.has_edge(4, 5));
  }
  for (std::size_t r = 1; r <= 7; ++r) {
    for (std::size_t c = 1; c <= 7; ++c) {
      const auto g = grid_graph(r, c);
      CHECK(g.num_edges() == r * (c - 1) + c * (r - 1));
      CHECK(is_symmetric_simple(g));
      if (r >= 2 && c >= 2) {
        std::size_t corners = 0;
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
          CHECK(g.degree(v) >= 2);
          CHECK(g.degree(v) <= 4);
          corners += g.degree(v) == 2;
        }
        CHECK(corners == 4);
      }
    }
  }
}

TEST_CASE("near-square grid dimensions") {
  CHECK(near_square_dims(36) == std::pair<std::size_t, std::size_t>{6, 6});
  CHECK(near_square_dims(7) == std::pair<std::size_t, std::size_t>{1, 7});
  CHECK(near_square_dims(12) == std::pair<std::size_t, std::size_t>{3, 4});
  CHECK(near_square_dims(1) == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(near_square_grid(12) == grid_graph(3, 4));
  CHECK_THROWS_AS(near_square_dims(0), ParameterError);
}

TEST_CASE("random regular graphs") {
  SUBCASE("n=4, d=3 is K4") { CHECK(random_regular_graph(4, 3, 123) == complete_graph(4)); }
  SUBCASE("n=10, d=3") {
    const auto g = random_regular_graph(10, 3, 1);
    for (Vertex v = 0; v < 10; ++v) CHECK(g.degree(v) == 3);
  }
  SUBCASE("n=50, d=6 over 50 seeds") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto g = random_regular_graph(50, 6, seed);
      REQUIRE(is_symmetric_simple(g));
      CHECK(g.num_edges() == 150);
      for (Vertex v = 0; v < 50; ++v) CHECK(g.degree(v) == 6);
    }
  }
  SUBCASE("deterministic per seed") {
    CHECK(random_regular_graph(40, 4, 9) == random_regular_graph(40, 4, 9));
    CHECK_FALSE(random_regular_graph(40, 4, 9) == random_regular_graph(40, 4, 10));
  }
  SUBCASE("infeasible parameters") {
    CHECK_THROWS_AS(random_regular_graph(5, 3, 0), ParameterError);
    CHECK_THROWS_AS(random_regular_graph(4, 4, 0), ParameterError);
  }
  SUBCASE("dense degrees still succeed") {
    const auto g = random_regular_graph(30, 12, 3);
    for (Vertex v = 0; v < 30; ++v) CHECK(g.degree(v) == 12);
  }
}

TEST_CASE("erdos-renyi extremes") {
  CHECK(erdos_renyi_graph(6, 0.0, 1).num_edges() == 0);
  CHECK(erdos_renyi_graph(6, 1.0, 1) == complete_graph(6));
  CHECK_THROWS_AS(erdos_renyi_graph(6, 1.5, 1), ParameterError);
}

TEST_CASE("edge list reader") {
  SUBCASE("plain path") {
    const auto g = read_edge_list("0 1\n1 2");
    CHECK(g == path_graph(3));
  }
  SUBCASE("header fixes vertex count") {
    const auto g = read_edge_list("n 4\n0 1\n");
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 1);
  }
  SUBCASE("comments and blank lines") {
    const auto g = read_edge_list("# a comment\n\n0 1\r\n  # another\n1 2\n");
    CHECK(g == path_graph(3));
  }
  SUBCASE("self-loop reports its line") {
    try {
      read_edge_list("2 2\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
    }
  }
  SUBCASE("duplicate edge reports the second occurrence") {
    try {
      read_edge_list("0 1\n1 2\n1 0\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("malformed lines") {
    CHECK_THROWS_AS(read_edge_list("0 1 2\n"), ParseError);
    CHECK_THROWS_AS(read_edge_list("0 x\n"), ParseError);
    CHECK_THROWS_AS(read_edge_list("-1 2\n"), ParseError);
    CHECK_THROWS_AS(read_edge_list("n 2\n0 3\n"), ParseError);
  }
}

TEST_CASE("edge list round trip") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = erdos_renyi_graph(25, 0.2, rng());
    std::ostringstream out;
    write_edge_list(g, out);
    CHECK(read_edge_list(out.str()) == g);
  }
}

TEST_CASE("METIS writer") {
  CHECK(metis_text(path_graph(3)) == "3 2\n2\n1 3\n2\n");
  CHECK(metis_text(Graph(2)) == "2 0\n\n\n");
  CHECK(metis_text(complete_graph(3)) == "3 3\n2 3\n1 3\n1 2\n");
}

TEST_CASE("METIS output re-read by an independent reader") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = erdos_renyi_graph(30, 0.15, rng());
    const auto text = metis_text(g);
    int n = 0;
    CHECK(testing::metis_edge_set(text, &n) == testing::edge_set(g));
    CHECK(n == 30);
    std::istringstream in(text);
    CHECK(read_metis_graph(in) == g);
  }
}

TEST_CASE("METIS reader rejects inconsistent files") {
  std::istringstream asym("2 1\n2\n\n");
  CHECK_THROWS_AS(read_metis_graph(asym), ParseError);
  std::istringstream count("2 2\n2\n1\n");
  CHECK_THROWS_AS(read_metis_graph(count), ParseError);
}

TEST_CASE("partition files") {
  SUBCASE("read") {
    const auto p = read_partition_file("0\n0\n1\n1", 2);
    CHECK(std::vector<Color>(p.colors().begin(), p.colors().end()) == std::vector<Color>{0, 0, 1, 1});
    CHECK(p.respects_capacities());
  }
  SUBCASE("color out of range") {
    try {
      read_partition_file("0\n2\n", 2);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("line count checked against graph") {
    CHECK_THROWS_AS(read_partition_file("0\n1\n", 2, 3), ParseError);
    CHECK_NOTHROW(read_partition_file("0\n1\n1\n", 2, 3));
  }
  SUBCASE("round trip of a random partition") {
    std::mt19937_64 rng(3);
    const auto p = testing::shuffled_balanced(100, 5, rng);
    std::ostringstream out;
    write_partition_file(p, out);
    CHECK(read_partition_file(out.str(), 5) == p);
  }
}

TEST_CASE("balanced capacities") {
  CHECK(balanced_capacities(36, 5) == std::vector<std::size_t>{8, 7, 7, 7, 7});
  CHECK(balanced_capacities(36, 3) == std::vector<std::size_t>{12, 12, 12});
  CHECK(balanced_capacities(2, 4) == std::vector<std::size_t>{1, 1, 0, 0});
  CHECK_THROWS_AS(balanced_capacities(3, 0), ParameterError);
  CHECK_THROWS_AS(Partition({0, 1}, std::vector<std::size_t>{1, 2}), ParameterError);
  CHECK_THROWS_AS(Partition({0, 3}, 2), ParameterError);
}
