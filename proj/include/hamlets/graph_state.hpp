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
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "hamlets/graph.hpp"
#include "hamlets/metrics.hpp"

namespace hamlets {

using QubitId = std::uint32_t;

/// Protocol events as recorded by a GraphState with tracing enabled.
struct ProtocolEvent {
  enum class Kind { kPairOpen, kBell, kPlus, kCz, kLocalComplement, kMeasureZ, kMeasureY };

  Kind kind;
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  friend bool operator==(const ProtocolEvent&, const ProtocolEvent&) = default;
};

/// Edge structure of a graph state. Qubit ids are handed out in increasing
/// order and never reused; measured qubits are dead.
///
/// Only the graph is tracked. Local Clifford corrections and measurement
/// byproducts are treated as free and are not simulated.
class GraphState {
 public:
  GraphState() = default;
  /// `n` live qubits with ids 0..n-1 and no edges.
  explicit GraphState(std::size_t n);
  /// |g>: one qubit per vertex, one CZ per edge.
  explicit GraphState(const Graph& g);

  std::size_t num_ids() const noexcept { return adj_.size(); }
  std::size_t num_live() const noexcept { return num_live_; }
  bool is_live(QubitId q) const { return q < live_.size() && live_[q]; }
  const std::set<QubitId>& neighbors(QubitId q) const;
  bool has_edge(QubitId a, QubitId b) const;
  std::size_t num_edges() const noexcept { return num_edges_; }
  /// Live-qubit edges with a < b, sorted.
  std::vector<std::pair<QubitId, QubitId>> edges() const;

  QubitId add_plus_qubit();
  /// Toggles edge ab. Throws ParameterError if a == b.
  void apply_cz(QubitId a, QubitId b);
  /// Complements the subgraph induced on N(a).
  void local_complement(QubitId a);
  /// Deletes a and its edges.
  void measure_z(QubitId a);
  /// local_complement(a) then measure_z(a).
  void measure_y(QubitId a);

  /// Two fresh qubits joined by an edge: the graph-state form of a Bell pair
  /// between the mayors of hamlets `tag_a` and `tag_b`. Returns (qa, qb).
  std::pair<QubitId, QubitId> bell_pair(Color tag_a, Color tag_b);

  std::size_t bell_pairs_used() const noexcept { return bell_pairs_used_; }
  const std::map<ColorPair, std::size_t>& bells_per_pair() const noexcept { return per_pair_bells_; }

  /// Event recording; pair-open markers are recorded by callers via
  /// note_pair_open.
  void set_recording(bool on) { recording_ = on; }
  void note_pair_open(Color a, Color b);
  std::span<const ProtocolEvent> events() const noexcept { return events_; }

  /// Subgraph on the live qubits with ids < n, as a Graph over 0..n-1.
  /// Throws StateError if any of those qubits is dead or if a live qubit
  /// with id < n has an edge to a qubit with id >= n.
  Graph restrict_to(std::size_t n) const;

 private:
  void require_live(QubitId q) const;
  void toggle(QubitId a, QubitId b);
  void record(ProtocolEvent::Kind kind, std::uint32_t a, std::uint32_t b = 0);

  std::vector<std::set<QubitId>> adj_;
  std::vector<bool> live_;
  std::size_t num_live_ = 0;
  std::size_t num_edges_ = 0;
  std::size_t bell_pairs_used_ = 0;
  std::map<ColorPair, std::size_t> per_pair_bells_;
  bool recording_ = false;
  std::vector<ProtocolEvent> events_;
};

}  // namespace hamlets
