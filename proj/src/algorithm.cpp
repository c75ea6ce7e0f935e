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

#include "hamlets/algorithm.hpp"

#include <charconv>
#include <string>

#include "hamlets/baselines.hpp"
#include "hamlets/bury.hpp"
#include "hamlets/errors.hpp"

namespace hamlets {

namespace {

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    throw ParameterError("malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string AlgorithmSpec::label(std::size_t k) const {
  switch (kind) {
    case Kind::kBury: return "bury";
    case Kind::kBurySeed: return "bury-seed:" + std::to_string(param);
    case Kind::kKernighanLin: return k > 2 ? "kl-recursive" : "kl";
    case Kind::kRandom: return "random:" + std::to_string(param);
  }
  return "unknown";
}

AlgorithmSpec parse_algorithm(std::string_view text) {
  const auto colon = text.find(':');
  const auto name = text.substr(0, colon);
  const auto arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  const bool has_arg = colon != std::string_view::npos;
  if (name == "bury" && !has_arg) return {AlgorithmSpec::Kind::kBury, 0};
  if (name == "kl" && !has_arg) return {AlgorithmSpec::Kind::kKernighanLin, 0};
  if (name == "bury-seed" && has_arg) {
    return {AlgorithmSpec::Kind::kBurySeed, parse_count(arg, "seed vertex")};
  }
  if (name == "random") {
    const std::size_t trials = has_arg ? parse_count(arg, "trial count") : 1;
    if (trials == 0) throw ParameterError("random:<N> needs N >= 1");
    return {AlgorithmSpec::Kind::kRandom, trials};
  }
  throw ParameterError("unknown algorithm '" + std::string(text) +
                       "' (expected bury, bury-seed:<v>, kl, random:<N>)");
}

Partition run_algorithm(const AlgorithmSpec& spec, const Graph& g, std::size_t k,
                        std::uint64_t rng_seed) {
  if (k == 0) throw ParameterError("k must be positive");
  const auto caps = balanced_capacities(g.num_vertices(), k);
  switch (spec.kind) {
    case AlgorithmSpec::Kind::kBury:
      return bury_kpartition(g, caps, rng_seed);
    case AlgorithmSpec::Kind::kBurySeed:
      if (spec.param >= g.num_vertices()) {
        throw ParameterError("seed vertex " + std::to_string(spec.param) + " out of range");
      }
      return bury_seeding_kpartition(g, caps, static_cast<Vertex>(spec.param), rng_seed);
    case AlgorithmSpec::Kind::kKernighanLin:
      return kernighan_lin(g, k, rng_seed);
    case AlgorithmSpec::Kind::kRandom:
      return random_sampling(g, k, spec.param, rng_seed);
  }
  throw ParameterError("unknown algorithm kind");
}

}  // namespace hamlets
