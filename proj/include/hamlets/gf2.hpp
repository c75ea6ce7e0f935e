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

#include "hamlets/matching.hpp"

namespace hamlets {

/// Dense matrix over GF(2), rows packed into 64-bit words.
class BitMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (row(r)[c / kWordBits] >> (c % kWordBits)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool value = true);
  void flip(std::size_t r, std::size_t c) { row(r)[c / kWordBits] ^= Word{1} << (c % kWordBits); }

  std::span<Word> row(std::size_t r) { return {words_.data() + r * stride_, stride_}; }
  std::span<const Word> row(std::size_t r) const { return {words_.data() + r * stride_, stride_}; }

  /// row(dst) ^= row(src)
  void xor_row(std::size_t src, std::size_t dst);
  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> words_;
};

/// |left| x |right| matrix with a 1 for every cross edge.
BitMatrix biadjacency(const BipartiteCrossGraph& bg);

/// Rank over GF(2) by row reduction. Takes its argument by value and
/// reduces the copy.
std::size_t rank_gf2(BitMatrix m);

}  // namespace hamlets
