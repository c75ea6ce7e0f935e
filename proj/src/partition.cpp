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

#include "hamlets/partition.hpp"

#include <numeric>
#include <string>

#include "hamlets/errors.hpp"

namespace hamlets {

std::vector<std::size_t> balanced_capacities(std::size_t n, std::size_t k) {
  if (k == 0) throw ParameterError("number of parts must be positive");
  std::vector<std::size_t> caps(k, n / k);
  for (std::size_t i = 0; i < n % k; ++i) ++caps[i];
  return caps;
}

Partition::Partition(std::vector<Color> colors, std::size_t k)
    : Partition(std::move(colors), balanced_capacities(colors.size(), k)) {}

Partition::Partition(std::vector<Color> colors, std::vector<std::size_t> capacities)
    : colors_(std::move(colors)), capacities_(std::move(capacities)) {
  if (capacities_.empty()) throw ParameterError("partition needs at least one color");
  const auto total = std::accumulate(capacities_.begin(), capacities_.end(), std::size_t{0});
  if (total != colors_.size()) {
    throw ParameterError("capacities sum to " + std::to_string(total) + " but there are " +
                         std::to_string(colors_.size()) + " vertices");
  }
  for (std::size_t v = 0; v < colors_.size(); ++v) {
    if (colors_[v] >= capacities_.size()) {
      throw ParameterError("vertex " + std::to_string(v) + " has color " +
                           std::to_string(colors_[v]) + " >= k=" +
                           std::to_string(capacities_.size()));
    }
  }
}

Partition Partition::monochrome(std::size_t n) { return Partition(std::vector<Color>(n, 0), 1); }

std::vector<std::size_t> Partition::counts() const {
  std::vector<std::size_t> out(k(), 0);
  for (Color c : colors_) ++out[c];
  return out;
}

}  // namespace hamlets
