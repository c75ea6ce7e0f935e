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

// Command-line front end: graph generation, partitioning, evaluation, VCG
// simulation and benchmark sweeps.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure, 3 I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hamlets/algorithm.hpp"
#include "hamlets/bench.hpp"
#include "hamlets/bury.hpp"
#include "hamlets/errors.hpp"
#include "hamlets/generators.hpp"
#include "hamlets/io.hpp"
#include "hamlets/metrics.hpp"
#include "hamlets/vcg.hpp"

namespace {

using namespace hamlets;

constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to a file, or to stdout when the path is empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw IoError("cannot open " + path + " for writing");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void close(const std::string& path) {
    if (file_) {
      file_->close();
      if (!*file_) throw IoError("failed writing " + path);
    }
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

Graph load_graph(const std::string& path) {
  try {
    return load_graph_file(path);
  } catch (const ParseError& e) {
    throw IoError(path + ": " + e.what());
  } catch (const ParameterError& e) {
    throw IoError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
}

// k = max color + 1 unless given explicitly.
Partition load_partition(const std::string& path, std::size_t k, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (k == 0) {
    std::istringstream scan(text);
    long long c = 0;
    long long max_color = -1;
    while (scan >> c) max_color = std::max(max_color, c);
    k = static_cast<std::size_t>(std::max<long long>(max_color + 1, 1));
  }
  Partition p = [&] {
    try {
      return read_partition_file(std::string_view(text), k, g.num_vertices());
    } catch (const ParseError& e) {
      throw IoError(path + ": " + e.what());
    }
  }();
  return p;
}

template <typename T>
std::vector<T> parse_list(const std::string& text) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::istringstream conv(item);
    T value{};
    if (!(conv >> value) || !conv.eof()) throw UsageError("malformed list entry '" + item + "'");
    out.push_back(value);
  }
  return out;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string family = "grid";
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t n = 0;
  std::size_t degree = 3;
  double p = 0.1;
  std::uint64_t seed = 0;
  std::string format = "edgelist";
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  Graph g;
  const auto family = parse_family(a.family);
  switch (family) {
    case GraphFamily::kGrid:
      if (a.rows && a.cols) {
        g = grid_graph(a.rows, a.cols);
      } else if (a.n) {
        g = near_square_grid(a.n);
      } else {
        throw UsageError("grid needs --rows and --cols, or --n");
      }
      break;
    case GraphFamily::kRegular:
      if (!a.n) throw UsageError("regular needs --n");
      g = random_regular_graph(a.n, a.degree, a.seed);
      break;
    case GraphFamily::kErdosRenyi:
      if (!a.n) throw UsageError("erdos-renyi needs --n");
      g = erdos_renyi_graph(a.n, a.p, a.seed);
      break;
    case GraphFamily::kFile:
      throw UsageError("gen cannot generate family 'file'");
  }
  Output out(a.out);
  if (a.format == "metis") {
    write_metis_graph(g, out.stream());
  } else if (a.format == "edgelist") {
    write_edge_list(g, out.stream());
  } else {
    throw UsageError("unknown format '" + a.format + "'");
  }
  out.close(a.out);
  return 0;
}

// ---------------------------------------------------------------- partition

struct PartitionArgs {
  std::string input;
  std::size_t k = 2;
  std::string algo = "bury";
  std::string capacities;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_partition(const PartitionArgs& a) {
  const auto spec = parse_algorithm(a.algo);
  const Graph g = load_graph(a.input);
  Partition p = Partition::monochrome(g.num_vertices());
  if (!a.capacities.empty()) {
    if (spec.kind != AlgorithmSpec::Kind::kBury) throw UsageError("--capacities is only supported by bury");
    const auto caps = parse_list<std::size_t>(a.capacities);
    p = bury_kpartition(g, caps, a.seed);
  } else {
    if (a.k == 0 || a.k > std::max<std::size_t>(g.num_vertices(), 1)) {
      throw UsageError("k must lie in 1.." + std::to_string(g.num_vertices()));
    }
    p = run_algorithm(spec, g, a.k, a.seed);
  }
  Output out(a.out);
  write_partition_file(p, out.stream());
  out.close(a.out);
  return 0;
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  std::string input;
  std::string partition;
  std::size_t k = 0;
  std::string metrics = "edges,matching,cutrank";
  std::string csv;
};

int cmd_eval(const EvalArgs& a) {
  const Graph g = load_graph(a.input);
  const Partition p = load_partition(a.partition, a.k, g);
  bool edges = false;
  bool matching = false;
  bool cutrank = false;
  std::stringstream ss(a.metrics);
  std::string item;
  while (std::getline(ss, item, ',')) {
    switch (parse_objective(item)) {
      case Objective::kCutEdges: edges = true; break;
      case Objective::kMatchingSum: matching = true; break;
      case Objective::kCutRankSum: cutrank = true; break;
    }
  }
  const auto report = evaluate(g, p, {.matchings = matching, .cut_ranks = cutrank});
  std::cout << "n " << g.num_vertices() << "\nk " << p.k() << '\n';
  write_report(report, std::cout, edges, matching, cutrank);
  if (!a.csv.empty()) {
    const bool fresh = !std::ifstream(a.csv).good();
    std::ofstream csv(a.csv, std::ios::app | std::ios::binary);
    if (!csv) throw IoError("cannot open " + a.csv);
    if (fresh) write_csv_header(csv);
    BenchRow row;
    row.family = "file";
    row.n = g.num_vertices();
    row.k = p.k();
    row.algorithm = "external";
    row.cut_edges = report.cut_edges;
    row.matching_sum = report.matching_sum;
    row.cutrank_sum = report.cutrank_sum;
    write_csv_row(row, csv);
  }
  return 0;
}

// ---------------------------------------------------------------- vcg

struct VcgArgs {
  std::string input;
  std::string partition;
  std::size_t k = 0;
  bool verify = false;
  std::string trace_out;
};

int cmd_vcg(const VcgArgs& a) {
  const Graph g = load_graph(a.input);
  const Partition p = load_partition(a.partition, a.k, g);
  const auto result = execute_vcg(g, p);
  if (!a.trace_out.empty()) {
    Output out(a.trace_out);
    write_trace(result.trace.ops, g.num_vertices(), out.stream());
    out.close(a.trace_out);
  }
  for (const auto& [pair, bells] : result.trace.per_pair_bells) {
    std::cout << "pair " << pair.first << ' ' << pair.second << " bell_pairs " << bells << '\n';
  }
  std::cout << "bell_pairs " << result.trace.bell_pairs_used << '\n';
  if (!a.verify) return 0;

  const auto check = check_vcg(g, p, result);
  std::cout << "matching_sum " << check.expected_bells << '\n';
  if (check.ok()) {
    std::cout << "verified: final state equals input graph\n";
    return 0;
  }
  std::cout << "verification FAILED\n";
  if (!check.ancillas_measured) std::cout << "ancilla qubits left unmeasured\n";
  if (!check.bell_count_matches) std::cout << "bell count differs from matching_sum\n";
  for (const auto& e : check.missing) std::cout << "- " << e.u << ' ' << e.v << '\n';
  for (const auto& e : check.extra) std::cout << "+ " << e.u << ' ' << e.v << '\n';
  return kExitVerification;
}

// ---------------------------------------------------------------- replay

struct ReplayArgs {
  std::string input;
  std::string trace;
};

int cmd_replay(const ReplayArgs& a) {
  const Graph g = load_graph(a.input);
  std::ifstream in(a.trace);
  if (!in) throw IoError("cannot open " + a.trace);
  GraphState state;
  try {
    state = replay_trace(in);
  } catch (const ParseError& e) {
    throw IoError(a.trace + ": " + e.what());
  }
  std::cout << "bell_pairs " << state.bell_pairs_used() << '\n';
  const bool matches = state.num_live() == g.num_vertices() && state.restrict_to(g.num_vertices()) == g;
  std::cout << (matches ? "replay matches input graph\n" : "replay state differs from input graph\n");
  return matches ? 0 : kExitVerification;
}

// ---------------------------------------------------------------- export-metis

struct ExportArgs {
  std::string input;
  std::string out;
};

int cmd_export(const ExportArgs& a) {
  const Graph g = load_graph(a.input);
  Output out(a.out);
  write_metis_graph(g, out.stream());
  out.close(a.out);
  return 0;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::string family = "grid";
  std::string sizes;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::size_t n_step = 0;
  std::size_t degree = 3;
  double p = 0.1;
  std::vector<std::string> inputs;
  std::string ks = "2";
  std::string algos;
  std::size_t samples = 1;
  std::uint64_t seed = 0;
  std::size_t threads = 0;
  std::string out;
};

int cmd_bench(const BenchArgs& a) {
  BenchSpec spec;
  spec.family = parse_family(a.family);
  spec.sizes = parse_list<std::size_t>(a.sizes);
  if (a.n_step && a.n_max) {
    for (std::size_t n = std::max<std::size_t>(a.n_min, 1); n <= a.n_max; n += a.n_step) spec.sizes.push_back(n);
  }
  spec.degree = a.degree;
  spec.edge_probability = a.p;
  spec.files = a.inputs;
  spec.ks = parse_list<std::size_t>(a.ks);
  std::stringstream ss(a.algos);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) spec.algorithms.push_back(parse_algorithm(item));
  }
  spec.samples = a.samples;
  spec.rng_seed = a.seed;
  spec.threads = a.threads ? a.threads : std::max(1u, std::thread::hardware_concurrency());
  validate(spec);

  const auto rows = run_bench(spec);
  Output out(a.out);
  write_csv_header(out.stream());
  for (const auto& row : rows) write_csv_row(row, out.stream());
  out.close(a.out);
  std::size_t failed = 0;
  for (const auto& row : rows) failed += row.error.empty() ? 0 : 1;
  if (failed) std::cerr << failed << " of " << rows.size() << " runs failed (see error column)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition graph states across QPUs and simulate their distributed generation"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a benchmark graph");
  gen_cmd->add_option("--family", gen.family, "grid, regular or erdos-renyi");
  gen_cmd->add_option("--rows", gen.rows);
  gen_cmd->add_option("--cols", gen.cols);
  gen_cmd->add_option("--n", gen.n, "Vertex count (near-square grid, regular, erdos-renyi)");
  gen_cmd->add_option("--degree", gen.degree);
  gen_cmd->add_option("--p", gen.p, "Edge probability for erdos-renyi");
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--format", gen.format, "edgelist or metis");
  gen_cmd->add_option("-o,--output", gen.out);

  PartitionArgs part;
  auto* part_cmd = app.add_subcommand("partition", "Partition a graph into k hamlets");
  part_cmd->add_option("-i,--input", part.input)->required();
  part_cmd->add_option("-k", part.k);
  part_cmd->add_option("--algo", part.algo, "bury, bury-seed:<v>, kl, random:<N>");
  part_cmd->add_option("--capacities", part.capacities, "Comma-separated part sizes (bury only)");
  part_cmd->add_option("--seed", part.seed);
  part_cmd->add_option("-o,--output", part.out);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a partition");
  eval_cmd->add_option("-i,--input", eval.input)->required();
  eval_cmd->add_option("-p,--partition", eval.partition)->required();
  eval_cmd->add_option("-k", eval.k, "Number of parts (default: max color + 1)");
  eval_cmd->add_option("--metrics", eval.metrics, "Subset of edges,matching,cutrank");
  eval_cmd->add_option("--csv", eval.csv, "Append a CSV row to this file");

  VcgArgs vcg;
  auto* vcg_cmd = app.add_subcommand("vcg", "Simulate vertex cover grafting for a partition");
  vcg_cmd->add_option("-i,--input", vcg.input)->required();
  vcg_cmd->add_option("-p,--partition", vcg.partition)->required();
  vcg_cmd->add_option("-k", vcg.k, "Number of parts (default: max color + 1)");
  vcg_cmd->add_flag("--verify", vcg.verify, "Check the final state and Bell count");
  vcg_cmd->add_option("--trace-out", vcg.trace_out);

  ReplayArgs replay;
  auto* replay_cmd = app.add_subcommand("replay", "Replay a VCG trace and compare with a graph");
  replay_cmd->add_option("-i,--input", replay.input)->required();
  replay_cmd->add_option("--trace", replay.trace)->required();

  ExportArgs exp;
  auto* export_cmd = app.add_subcommand("export-metis", "Convert a graph to METIS format");
  export_cmd->add_option("-i,--input", exp.input)->required();
  export_cmd->add_option("-o,--output", exp.out);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a CSV benchmark sweep");
  bench_cmd->add_option("--family", bench.family, "grid, regular, erdos-renyi or file");
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated vertex counts");
  bench_cmd->add_option("--n-min", bench.n_min);
  bench_cmd->add_option("--n-max", bench.n_max);
  bench_cmd->add_option("--n-step", bench.n_step);
  bench_cmd->add_option("--degree", bench.degree);
  bench_cmd->add_option("--p", bench.p);
  bench_cmd->add_option("--input", bench.inputs, "Graph files for family 'file'");
  bench_cmd->add_option("-k", bench.ks, "Comma-separated k values");
  bench_cmd->add_option("--algos", bench.algos, "Comma-separated algorithms")->required();
  bench_cmd->add_option("--samples", bench.samples);
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--threads", bench.threads, "Worker threads (default: all cores)");
  bench_cmd->add_option("-o,--output", bench.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*part_cmd) return cmd_partition(part);
    if (*eval_cmd) return cmd_eval(eval);
    if (*vcg_cmd) return cmd_vcg(vcg);
    if (*replay_cmd) return cmd_replay(replay);
    if (*export_cmd) return cmd_export(exp);
    if (*bench_cmd) return cmd_bench(bench);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ProtocolError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
