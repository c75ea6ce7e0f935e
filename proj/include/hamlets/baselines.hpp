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
#include <span>
#include <vector>

#include "hamlets/graph.hpp"
#include "hamlets/metrics.hpp"
#include "hamlets/partition.hpp"

namespace hamlets {

/// Kernighan-Lin bisection: `side[v]` is true for the part of size
/// `size_true`. Starts from a random balanced split and runs up to
/// `max_passes` swap passes, each keeping the best prefix of tentative swaps.
std::vector<bool> kernighan_lin_bisection(const Graph& g, std::size_t size_true,
                                          std::uint64_t rng_seed, std::size_t max_passes);

/// Edge-cut KL for any k >= 1. k > 2 recurses: the first ceil(k/2) colors are
/// split off from the rest with a capacity-matched bisection.
Partition kernighan_lin(const Graph& g, std::size_t k, std::uint64_t rng_seed,
                        std::size_t max_passes = 16);

/// Uniformly random coloring with the given color counts.
Partition random_balanced_partition(std::size_t n, std::span<const std::size_t> capacities,
                                    std::uint64_t rng_seed);

/// Best of `trials` random balanced partitions under `objective`; the first
/// one wins ties. Throws ParameterError if trials == 0.
Partition random_sampling(const Graph& g, std::size_t k, std::size_t trials,
                          std::uint64_t rng_seed, Objective objective = Objective::kMatchingSum);

struct ExhaustiveResult {
  Partition partition;
  std::size_t value;
};

inline constexpr double kExhaustiveMaxColorings = 1e7;

/// Number of balanced colorings exhaustive_optimum would enumerate.
/// Balanced colorings up to relabeling of equal-capacity colors.
double count_balanced_colorings(std::size_t n, std::size_t k);

/// True optimum over balanced k-colorings, enumerated up to permutations of
/// equal-capacity colors. Test oracle; throws OracleSizeError when the count
/// exceeds kExhaustiveMaxColorings.
ExhaustiveResult exhaustive_optimum(const Graph& g, std::size_t k, Objective objective);

}  // namespace hamlets
