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

namespace hamlets {

using Color = std::uint32_t;

/// Target part sizes for n vertices over k parts: the first n mod k parts
/// get ceil(n/k), the rest floor(n/k).
std::vector<std::size_t> balanced_capacities(std::size_t n, std::size_t k);

/// Assignment of every vertex to one of k colors, together with the target
/// size of each color class. The target is not enforced: partitions read
/// from external tools may be imbalanced.
class Partition {
 public:
  /// Capacities default to balanced_capacities(colors.size(), k).
  Partition(std::vector<Color> colors, std::size_t k);
  /// k = capacities.size(); throws ParameterError unless capacities sum to n.
  Partition(std::vector<Color> colors, std::vector<std::size_t> capacities);

  static Partition monochrome(std::size_t n);

  std::size_t size() const noexcept { return colors_.size(); }
  std::size_t k() const noexcept { return capacities_.size(); }
  Color color(Vertex v) const { return colors_[v]; }
  std::span<const Color> colors() const noexcept { return colors_; }
  std::span<const std::size_t> capacities() const noexcept { return capacities_; }

  std::vector<std::size_t> counts() const;
  bool respects_capacities() const { return counts() == capacities_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Color> colors_;
  std::vector<std::size_t> capacities_;
};

}  // namespace hamlets
