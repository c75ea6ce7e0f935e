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
#include <string>
#include <string_view>

#include "hamlets/graph.hpp"
#include "hamlets/partition.hpp"

namespace hamlets {

/// A partitioner by name: "bury", "bury-seed:<v>", "kl", "random:<N>".
struct AlgorithmSpec {
  enum class Kind { kBury, kBurySeed, kKernighanLin, kRandom };

  Kind kind = Kind::kBury;
  std::size_t param = 0;  // seed vertex or trial count

  /// Canonical name; KL with k > 2 is reported as "kl-recursive".
  std::string label(std::size_t k) const;
};

/// Throws ParameterError on unknown names or malformed parameters.
AlgorithmSpec parse_algorithm(std::string_view text);

/// Balanced k-partition of g with the named algorithm.
Partition run_algorithm(const AlgorithmSpec& spec, const Graph& g, std::size_t k,
                        std::uint64_t rng_seed);

}  // namespace hamlets
