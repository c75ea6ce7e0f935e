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
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hamlets/algorithm.hpp"
#include "hamlets/graph.hpp"

namespace hamlets {

enum class GraphFamily { kGrid, kRegular, kErdosRenyi, kFile };

GraphFamily parse_family(std::string_view name);
std::string_view family_name(GraphFamily family);

struct BenchSpec {
  GraphFamily family = GraphFamily::kGrid;
  /// Total vertex counts. Ignored for kFile.
  std::vector<std::size_t> sizes;
  std::size_t degree = 3;        // kRegular
  double edge_probability = 0.1;  // kErdosRenyi
  std::vector<std::string> files;  // kFile
  std::vector<std::size_t> ks;
  std::vector<AlgorithmSpec> algorithms;
  std::size_t samples = 1;
  std::uint64_t rng_seed = 0;
  std::size_t threads = 1;
};

/// Throws ParameterError if the sweep is empty or inconsistent (no
/// algorithms, odd n * d for regular graphs, k > n, ...).
void validate(const BenchSpec& spec);

struct BenchRow {
  std::string family;
  std::size_t n = 0;
  std::size_t k = 0;
  std::string algorithm;
  std::uint64_t rng_seed = 0;
  std::size_t cut_edges = 0;
  std::size_t matching_sum = 0;
  std::size_t cutrank_sum = 0;
  double wall_time_ms = 0.0;
  /// Empty on success, otherwise the error message of the failed run.
  std::string error;
};

/// Seed of graph sample `sample` at size n; independent of k and algorithm.
std::uint64_t sample_seed(std::uint64_t master, GraphFamily family, std::size_t n,
                          std::size_t sample);
/// Seed handed to a partitioner for one (graph sample, k, algorithm) run.
std::uint64_t algorithm_seed(std::uint64_t graph_seed, std::size_t k, std::string_view label);

/// Runs the sweep in parallel; rows come back in sweep order
/// (size, sample, k, algorithm) regardless of thread count.
std::vector<BenchRow> run_bench(const BenchSpec& spec);

inline constexpr std::string_view kCsvHeader =
    "family,n,k,algorithm,rng_seed,cut_edges,matching_sum,cutrank_sum,wall_time_ms,error";

void write_csv_header(std::ostream& out);
void write_csv_row(const BenchRow& row, std::ostream& out);

}  // namespace hamlets
