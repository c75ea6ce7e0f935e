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

// Acceptance suite: one PASS/FAIL line per criterion, each under a wall-time
// limit. Usage: acceptance <path-to-hamlets-binary>

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hamlets/algorithm.hpp"
#include "hamlets/baselines.hpp"
#include "hamlets/generators.hpp"
#include "hamlets/gf2.hpp"
#include "hamlets/graph_state.hpp"
#include "hamlets/matching.hpp"
#include "hamlets/metrics.hpp"
#include "hamlets/rng.hpp"
#include "hamlets/vcg.hpp"
#include "oracles.hpp"

using namespace hamlets;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  std::string name;
  double limit_s;
  std::function<Outcome()> check;
};

std::string fmt(double x, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::size_t matching_sum(const Graph& g, const Partition& p) {
  return objective_value(g, p, Objective::kMatchingSum);
}

Outcome grid_three_hamlets() {
  const auto g = grid_graph(6, 6);
  const auto p = run_algorithm(parse_algorithm("bury"), g, 3, 0);
  const auto report = evaluate(g, p);
  const auto vcg = execute_vcg(g, p);
  const auto check = check_vcg(g, p, vcg);
  std::string pairs;
  for (const auto& [pair, m] : report.pair_matchings) {
    pairs += std::to_string(pair.first) + "-" + std::to_string(pair.second) + ":" + std::to_string(m) + " ";
  }
  const bool pass = p.respects_capacities() && report.matching_sum <= 10 && check.ok() &&
                    vcg.trace.bell_pairs_used == report.matching_sum;
  return {pass, "matching_sum " + std::to_string(report.matching_sum) + " (target 9, bound 10), pairs " +
                    pairs + "bells " + std::to_string(vcg.trace.bell_pairs_used) +
                    (check.state_matches ? ", state exact" : ", STATE MISMATCH")};
}

Outcome vcg_suite() {
  std::mt19937_64 rng(1001);
  const char* algos[] = {"bury", "kl", "random:3"};
  std::size_t ok = 0;
  std::size_t bells = 0;
  const std::size_t total = 200;
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t k = 2 + i % 3;
    Graph g;
    switch (i % 4) {
      case 0: g = erdos_renyi_graph(20 + rng() % 41, 0.05 + 0.25 * (rng() % 100) / 100.0, rng()); break;
      case 1: g = random_regular_graph(2 * (10 + rng() % 21), 3 + rng() % 4, rng()); break;
      case 2: g = near_square_grid(9 + rng() % 52); break;
      default: g = erdos_renyi_graph(10 + rng() % 51, 0.3, rng()); break;
    }
    const auto p = i % 5 == 4 ? testing::random_coloring(g.num_vertices(), k, rng)
                              : run_algorithm(parse_algorithm(algos[i % 3]), g, k, rng());
    const auto result = execute_vcg(g, p);
    const auto check = check_vcg(g, p, result);
    if (check.ok() && result.trace.bell_pairs_used == matching_sum(g, p)) ++ok;
    bells += result.trace.bell_pairs_used;
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) +
                           " instances exact with Bell count = matching_sum (" + std::to_string(bells) +
                           " Bell pairs total)"};
}

Outcome metric_ordering() {
  std::mt19937_64 rng(2002);
  std::size_t ok = 0;
  std::size_t strict_lower = 0;
  const std::size_t total = 1000;
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t n = 4 + rng() % 57;
    const std::size_t k = 2 + rng() % 4;
    const auto g = i % 2 ? erdos_renyi_graph(n, 0.05 + 0.4 * (rng() % 100) / 100.0, rng())
                         : near_square_grid(n);
    const auto p = i % 3 ? testing::random_coloring(n, k, rng) : testing::shuffled_balanced(n, k, rng);
    const auto r = evaluate(g, p);
    if (r.cutrank_sum <= r.matching_sum && r.matching_sum <= r.cut_edges) ++ok;
    if (r.cutrank_sum < r.matching_sum) ++strict_lower;
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) +
                           " satisfy cutrank <= matching <= cut_edges (" + std::to_string(strict_lower) +
                           " with cutrank strictly lower)"};
}

Outcome matching_oracle() {
  std::mt19937_64 rng(3003);
  std::size_t agree = 0;
  std::size_t konig = 0;
  const std::size_t total = 500;
  for (std::size_t i = 0; i < total; ++i) {
    const auto bg = testing::random_bipartite(rng, 8, kBruteForceMaxEdges);
    const auto m = hopcroft_karp(bg);
    if (m.size() == brute_force_matching(bg)) ++agree;
    const std::set<BipartiteCrossGraph::Index> cl(m.cover_left.begin(), m.cover_left.end());
    const std::set<BipartiteCrossGraph::Index> cr(m.cover_right.begin(), m.cover_right.end());
    bool covers = m.cover.size() == m.size();
    for (const auto& [l, r] : bg.edges) covers = covers && (cl.contains(l) || cr.contains(r));
    if (covers) ++konig;
  }
  return {agree == total && konig == total,
          std::to_string(agree) + "/" + std::to_string(total) + " sizes match brute force, " +
              std::to_string(konig) + "/" + std::to_string(total) + " covers valid with |cover| = |matching|"};
}

Outcome gf2_oracle() {
  std::mt19937_64 rng(4004);
  std::size_t agree = 0;
  const std::size_t total = 500;
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t rows = 1 + rng() % 64;
    const std::size_t cols = 1 + rng() % 64;
    const auto d = testing::random_bits(rows, cols, 0.05 + 0.9 * (rng() % 100) / 100.0, rng);
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, d[r][c] != 0);
    }
    if (rank_gf2(m) == testing::naive_rank_gf2(d)) ++agree;
  }
  bool special = true;
  for (std::size_t n = 1; n <= 64; ++n) {
    BitMatrix ones(n, 65 - n);
    BitMatrix id(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      id.set(r, r);
      for (std::size_t c = 0; c < 65 - n; ++c) ones.set(r, c);
    }
    special = special && rank_gf2(ones) == 1 && rank_gf2(id) == n;
  }
  return {agree == total && special, std::to_string(agree) + "/" + std::to_string(total) +
                                         " random ranks match; all-ones rank 1 and identity rank n: " +
                                         (special ? "yes" : "NO")};
}

std::set<std::pair<QubitId, QubitId>> edge_pairs(const GraphState& s) {
  const auto e = s.edges();
  return {e.begin(), e.end()};
}

Outcome graph_state_algebra() {
  std::mt19937_64 rng(5005);
  std::size_t involutions = 0;
  for (int i = 0; i < 200; ++i) {
    const auto g = erdos_renyi_graph(5 + rng() % 30, 0.1 + 0.5 * (rng() % 100) / 100.0, rng());
    GraphState s(g);
    const auto before = edge_pairs(s);
    const auto v = static_cast<QubitId>(rng() % g.num_vertices());
    s.local_complement(v);
    s.local_complement(v);
    if (edge_pairs(s) == before) ++involutions;
  }
  std::size_t paths = 0;
  for (std::size_t n = 3; n <= 100; ++n) {
    GraphState s(path_graph(n));
    const auto v = static_cast<QubitId>(1 + rng() % (n - 2));
    s.measure_y(v);
    std::set<std::pair<QubitId, QubitId>> expected{{v - 1, v + 1}};
    for (QubitId i = 0; i + 1 < n; ++i) {
      if (i != v && i + 1 != v) expected.insert({i, i + 1});
    }
    if (s.num_live() == n - 1 && edge_pairs(s) == expected) ++paths;
  }
  std::size_t grafts = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 3 + rng() % 20;
    const auto g = erdos_renyi_graph(n, 0.3, rng());
    const auto v = static_cast<QubitId>(rng() % n);
    std::vector<QubitId> remote;
    for (QubitId u = 0; u < n; ++u) {
      if (u != v && !g.has_edge(u, v) && rng() % 2) remote.push_back(u);
    }
    if (remote.empty()) {
      for (QubitId u = 0; u < n && remote.empty(); ++u) {
        if (u != v && !g.has_edge(u, v)) remote.push_back(u);
      }
    }
    if (remote.empty()) {
      ++grafts;  // v is adjacent to everything: nothing to graft
      continue;
    }
    GraphState s(g);
    auto expected = edge_pairs(s);
    for (QubitId u : remote) expected.insert({std::min(u, v), std::max(u, v)});
    graft_star(s, v, remote, {0, 1});
    if (edge_pairs(s) == expected && s.num_live() == n && s.bell_pairs_used() == 1) ++grafts;
  }
  return {involutions == 200 && paths == 98 && grafts == 200,
          "LC involution " + std::to_string(involutions) + "/200, Y on path " + std::to_string(paths) +
              "/98, star grafts " + std::to_string(grafts) + "/200"};
}

Outcome small_instance_gap() {
  struct Instance {
    std::string name;
    Graph g;
    std::size_t k;
    std::size_t pinned;
  };
  const std::vector<Instance> instances = {{"P4", path_graph(4), 2, 1},
                                           {"P12", path_graph(12), 3, 2},
                                           {"K4", complete_graph(4), 2, 2},
                                           {"grid4x4", grid_graph(4, 4), 2, 4}};
  bool pass = true;
  std::string detail;
  for (const auto& inst : instances) {
    const auto opt = exhaustive_optimum(inst.g, inst.k, Objective::kMatchingSum).value;
    const auto got = matching_sum(inst.g, run_algorithm(parse_algorithm("bury"), inst.g, inst.k, 0));
    pass = pass && opt == inst.pinned && got <= opt + 1;
    detail += inst.name + " bury " + std::to_string(got) + " opt " + std::to_string(opt) + "; ";
  }
  return {pass, detail};
}

struct RegularSweep {
  bool ran = false;
  // [size index][algorithm index] -> (mean matching_sum, mean cutrank_sum)
  std::vector<std::vector<std::pair<double, double>>> means;
  double seconds = 0;
};

const std::vector<std::size_t> kHamletSizes = {25, 50, 100};
const std::vector<std::string> kSweepAlgos = {"bury", "kl", "random:100"};

RegularSweep& regular_sweep() {
  static RegularSweep sweep;
  if (sweep.ran) return sweep;
  const auto start = std::chrono::steady_clock::now();
  constexpr std::size_t kSamples = 50;
  for (std::size_t size : kHamletSizes) {
    std::vector<std::pair<double, double>> row(kSweepAlgos.size());
    for (std::size_t s = 0; s < kSamples; ++s) {
      const auto g = random_regular_graph(2 * size, 6, derive_seed(6006, size * 1000 + s));
      for (std::size_t a = 0; a < kSweepAlgos.size(); ++a) {
        const auto p = run_algorithm(parse_algorithm(kSweepAlgos[a]), g, 2, derive_seed(7007, s));
        const auto r = evaluate(g, p);
        row[a].first += static_cast<double>(r.matching_sum) / kSamples;
        row[a].second += static_cast<double>(r.cutrank_sum) / kSamples;
      }
    }
    sweep.means.push_back(std::move(row));
  }
  sweep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  sweep.ran = true;
  return sweep;
}

Outcome regular_ordering(bool cutrank) {
  const auto& sweep = regular_sweep();
  bool pass = true;
  std::string detail;
  for (std::size_t i = 0; i < kHamletSizes.size(); ++i) {
    const auto pick = [&](std::size_t a) {
      return cutrank ? sweep.means[i][a].second : sweep.means[i][a].first;
    };
    pass = pass && pick(0) < pick(1) && pick(0) < pick(2);
    detail += "size " + std::to_string(kHamletSizes[i]) + ": bury " + fmt(pick(0)) + " kl " + fmt(pick(1)) +
              " random:100 " + fmt(pick(2)) + "; ";
  }
  if (cutrank) detail += "sweep shared with the matching_sum criterion";
  return {pass, detail};
}

int run_shell(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::string drop_wall_time(const std::string& csv) {
  // wall_time_ms is the ninth column.
  std::istringstream in(csv);
  std::string line;
  std::string out;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream cells(line);
    while (std::getline(cells, field, ',')) fields.push_back(field);
    if (fields.size() >= 9) fields[8].clear();
    for (const auto& f : fields) out += f + ",";
    out += "\n";
  }
  return out;
}

Outcome determinism(const std::string& cli) {
  if (cli.empty() || !fs::exists(cli)) return {false, "command-line binary not found: '" + cli + "'"};
  const auto dir = fs::temp_directory_path() / ("hamlets_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const auto q = [&](const std::string& name) { return "'" + (dir / name).string() + "'"; };
  const std::string bin = "'" + cli + "'";
  bool pass = run_shell(bin + " gen --family regular --n 200 --degree 6 --seed 3 -o " + q("g.txt")) == 0;
  std::size_t compared = 0;
  for (const char* algo : {"bury", "bury-seed:0", "kl", "random:50"}) {
    const std::string cmd = bin + " partition -i " + q("g.txt") + " -k 4 --seed 11 --algo " + algo + " -o ";
    pass = pass && run_shell(cmd + q("a.txt")) == 0 && run_shell(cmd + q("b.txt")) == 0;
    pass = pass && slurp(dir / "a.txt") == slurp(dir / "b.txt") && !slurp(dir / "a.txt").empty();
    ++compared;
  }
  const std::string bench = bin +
                            " bench --family erdos-renyi --sizes 40,60 --p 0.1 -k 2,3 "
                            "--algos bury,kl,random:10 --samples 3 --seed 5 ";
  pass = pass && run_shell(bench + "--threads 1 -o " + q("a.csv")) == 0 &&
         run_shell(bench + "--threads 3 -o " + q("b.csv")) == 0;
  const auto a = slurp(dir / "a.csv");
  pass = pass && !a.empty() && drop_wall_time(a) == drop_wall_time(slurp(dir / "b.csv"));
  fs::remove_all(dir);
  return {pass, std::to_string(compared) + " partition outputs and one bench CSV (1 vs 3 threads) "
                                           "compared byte-for-byte, wall time excluded"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria = {
      {"6x6 grid, k=3: BURY matching_sum and VCG replay", 1, grid_three_hamlets},
      {"VCG reproduces the input graph on 200 instances", 30, vcg_suite},
      {"metric ordering cutrank <= matching <= cut_edges", 60, metric_ordering},
      {"Hopcroft-Karp vs brute force and Konig covers", 10, matching_oracle},
      {"GF(2) rank vs naive elimination", 10, gf2_oracle},
      {"graph-state algebra: LC, Y measurement, star graft", 10, graph_state_algebra},
      {"BURY within +1 of the exhaustive optimum", 120, small_instance_gap},
      {"6-regular, k=2: BURY beats KL and random:100 on matching_sum", 300,
       [] { return regular_ordering(false); }},
      {"6-regular, k=2: BURY beats KL and random:100 on cutrank_sum", 300,
       [] { return regular_ordering(true); }},
      {"CLI partition and bench output is deterministic", 120, [&] { return determinism(cli); }},
  };

  std::size_t failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, ""};
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit_s;
    const bool pass = outcome.pass && in_time;
    if (!pass) ++failed;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << fmt(seconds, 3) << " s, limit "
              << fmt(c.limit_s, 0) << " s" << (in_time ? "" : ", TOO SLOW") << "]  " << outcome.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
