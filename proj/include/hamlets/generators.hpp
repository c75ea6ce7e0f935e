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
#include <utility>

#include "hamlets/graph.hpp"

namespace hamlets {

/// rows x cols square lattice; vertex (r, c) has index r * cols + c.
Graph grid_graph(std::size_t rows, std::size_t cols);

/// Factor pair (rows, cols) of n with rows <= cols and cols - rows minimal.
std::pair<std::size_t, std::size_t> near_square_dims(std::size_t n);

/// Lattice with n vertices whose side lengths are as close as possible.
Graph near_square_grid(std::size_t n);

/// Random simple d-regular graph on n vertices from the pairing model.
/// Stubs are paired at random, offending pairs (loops, repeated edges) are
/// re-paired, and the whole pairing restarts if no legal pair remains.
/// Throws ParameterError if n * d is odd or d >= n.
Graph random_regular_graph(std::size_t n, std::size_t degree, std::uint64_t seed);

/// G(n, p): each of the n(n-1)/2 possible edges present independently.
Graph erdos_renyi_graph(std::size_t n, double p, std::uint64_t seed);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// K_{1,leaves}; vertex 0 is the center.
Graph star_graph(std::size_t leaves);

}  // namespace hamlets
