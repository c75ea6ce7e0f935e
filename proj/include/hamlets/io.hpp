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
#include <optional>
#include <string>
#include <string_view>

#include "hamlets/graph.hpp"
#include "hamlets/partition.hpp"

namespace hamlets {

// Edge list: one "u v" pair per line, 0-based. '#' starts a comment line.
// An optional "n <count>" line fixes the vertex count, otherwise it is
// max index + 1.
Graph read_edge_list(std::istream& in);
Graph read_edge_list(std::string_view text);
void write_edge_list(const Graph& g, std::ostream& out);

// METIS .graph: header "n m", then line i + 1 lists the 1-based neighbors
// of vertex i.
void write_metis_graph(const Graph& g, std::ostream& out);
Graph read_metis_graph(std::istream& in);

/// Reads an edge list, or a METIS graph when the path ends in ".graph" or
/// ".metis". Throws std::runtime_error if the file cannot be opened.
Graph load_graph_file(const std::string& path);

// Partition file: line i holds the color of vertex i. This is also the
// format METIS writes for its *.part.k output.
Partition read_partition_file(std::istream& in, std::size_t k,
                              std::optional<std::size_t> expected_n = std::nullopt);
Partition read_partition_file(std::string_view text, std::size_t k,
                              std::optional<std::size_t> expected_n = std::nullopt);
void write_partition_file(const Partition& p, std::ostream& out);

}  // namespace hamlets
