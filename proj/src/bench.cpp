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

#include "hamlets/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <thread>

#include "hamlets/errors.hpp"
#include "hamlets/generators.hpp"
#include "hamlets/io.hpp"
#include "hamlets/metrics.hpp"
#include "hamlets/rng.hpp"

namespace hamlets {

GraphFamily parse_family(std::string_view name) {
  if (name == "grid") return GraphFamily::kGrid;
  if (name == "regular") return GraphFamily::kRegular;
  if (name == "erdos-renyi" || name == "er") return GraphFamily::kErdosRenyi;
  if (name == "file") return GraphFamily::kFile;
  throw ParameterError("unknown graph family '" + std::string(name) +
                       "' (expected grid, regular, erdos-renyi, file)");
}

std::string_view family_name(GraphFamily family) {
  switch (family) {
    case GraphFamily::kGrid: return "grid";
    case GraphFamily::kRegular: return "regular";
    case GraphFamily::kErdosRenyi: return "erdos-renyi";
    case GraphFamily::kFile: return "file";
  }
  return "unknown";
}

void validate(const BenchSpec& spec) {
  if (spec.algorithms.empty()) throw ParameterError("bench: no algorithms given");
  if (spec.ks.empty()) throw ParameterError("bench: no k values given");
  if (spec.samples == 0) throw ParameterError("bench: samples must be positive");
  if (spec.family == GraphFamily::kFile) {
    if (spec.files.empty()) throw ParameterError("bench: family 'file' needs input files");
    return;
  }
  if (spec.sizes.empty()) throw ParameterError("bench: no sizes given");
  for (auto n : spec.sizes) {
    if (n == 0) throw ParameterError("bench: sizes must be positive");
    for (auto k : spec.ks) {
      if (k == 0 || k > n) {
        throw ParameterError("bench: k=" + std::to_string(k) + " is invalid for n=" + std::to_string(n));
      }
    }
    if (spec.family == GraphFamily::kRegular &&
        ((n * spec.degree) % 2 != 0 || spec.degree >= n)) {
      throw ParameterError("bench: no " + std::to_string(spec.degree) + "-regular graph on " +
                           std::to_string(n) + " vertices");
    }
  }
  if (spec.family == GraphFamily::kErdosRenyi &&
      !(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0)) {
    throw ParameterError("bench: edge probability must lie in [0, 1]");
  }
}

std::uint64_t sample_seed(std::uint64_t master, GraphFamily family, std::size_t n, std::size_t sample) {
  std::uint64_t s = derive_seed(master, stable_hash(family_name(family)));
  s = derive_seed(s, n);
  return derive_seed(s, sample);
}

std::uint64_t algorithm_seed(std::uint64_t graph_seed, std::size_t k, std::string_view label) {
  return derive_seed(derive_seed(graph_seed, k), stable_hash(label));
}

namespace {

struct Job {
  std::size_t size_or_file;
  std::size_t sample;
};

Graph make_graph(const BenchSpec& spec, std::size_t size_or_file, std::uint64_t seed) {
  switch (spec.family) {
    case GraphFamily::kGrid: return near_square_grid(size_or_file);
    case GraphFamily::kRegular: return random_regular_graph(size_or_file, spec.degree, seed);
    case GraphFamily::kErdosRenyi: return erdos_renyi_graph(size_or_file, spec.edge_probability, seed);
    case GraphFamily::kFile: return load_graph_file(spec.files[size_or_file]);
  }
  throw ParameterError("unknown family");
}

std::vector<BenchRow> run_job(const BenchSpec& spec, const Job& job) {
  const std::string family(family_name(spec.family));
  const std::uint64_t graph_seed = sample_seed(spec.rng_seed, spec.family, job.size_or_file, job.sample);
  std::vector<BenchRow> rows;
  std::optional<Graph> graph;
  std::string graph_error;
  try {
    graph = make_graph(spec, job.size_or_file, graph_seed);
  } catch (const std::exception& e) {
    graph_error = e.what();
  }
  const std::size_t n = graph ? graph->num_vertices()
                              : (spec.family == GraphFamily::kFile ? 0 : job.size_or_file);
  for (auto k : spec.ks) {
    for (const auto& algo : spec.algorithms) {
      BenchRow row;
      row.family = family;
      row.n = n;
      row.k = k;
      row.algorithm = algo.label(k);
      row.rng_seed = graph_seed;
      if (!graph) {
        row.error = graph_error;
        rows.push_back(std::move(row));
        continue;
      }
      try {
        const auto start = std::chrono::steady_clock::now();
        const auto partition = run_algorithm(algo, *graph, k, algorithm_seed(graph_seed, k, row.algorithm));
        const auto stop = std::chrono::steady_clock::now();
        row.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        const auto report = evaluate(*graph, partition);
        row.cut_edges = report.cut_edges;
        row.matching_sum = report.matching_sum;
        row.cutrank_sum = report.cutrank_sum;
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchSpec& spec) {
  validate(spec);
  std::vector<Job> jobs;
  const std::size_t outer = spec.family == GraphFamily::kFile ? spec.files.size() : spec.sizes.size();
  for (std::size_t i = 0; i < outer; ++i) {
    const std::size_t key = spec.family == GraphFamily::kFile ? i : spec.sizes[i];
    for (std::size_t s = 0; s < spec.samples; ++s) jobs.push_back({key, s});
  }

  std::vector<std::vector<BenchRow>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = run_job(spec, jobs[i]);
  };
  const std::size_t threads = std::clamp<std::size_t>(spec.threads, 1, std::max<std::size_t>(jobs.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  std::vector<BenchRow> rows;
  for (auto& chunk : results) {
    for (auto& row : chunk) rows.push_back(std::move(row));
  }
  return rows;
}

void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

void write_csv_row(const BenchRow& row, std::ostream& out) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << row.family << ',' << row.n << ',' << row.k << ',' << csv_field(row.algorithm) << ','
      << row.rng_seed << ',' << row.cut_edges << ',' << row.matching_sum << ',' << row.cutrank_sum
      << ',' << std::fixed << std::setprecision(3) << row.wall_time_ms << ',' << csv_field(row.error)
      << '\n';
  out.flags(flags);
  out.precision(precision);
}

}  // namespace hamlets
