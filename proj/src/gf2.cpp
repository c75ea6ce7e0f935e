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

#include "hamlets/gf2.hpp"

#include <algorithm>

namespace hamlets {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows),
      cols_(cols),
      stride_((cols + kWordBits - 1) / kWordBits),
      words_(rows * stride_, 0) {}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  const Word mask = Word{1} << (c % kWordBits);
  auto& word = row(r)[c / kWordBits];
  word = value ? (word | mask) : (word & ~mask);
}

void BitMatrix::xor_row(std::size_t src, std::size_t dst) {
  auto from = row(src);
  auto to = row(dst);
  for (std::size_t i = 0; i < stride_; ++i) to[i] ^= from[i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

BitMatrix biadjacency(const BipartiteCrossGraph& bg) {
  BitMatrix m(bg.left.size(), bg.right.size());
  for (const auto& [l, r] : bg.edges) m.set(l, r);
  return m;
}

std::size_t rank_gf2(BitMatrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    const std::size_t word = c / BitMatrix::kWordBits;
    const BitMatrix::Word mask = BitMatrix::Word{1} << (c % BitMatrix::kWordBits);
    std::size_t pivot = rank;
    while (pivot < m.rows() && !(m.row(pivot)[word] & mask)) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, rank);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m.row(r)[word] & mask) m.xor_row(rank, r);
    }
    ++rank;
  }
  return rank;
}

}  // namespace hamlets
