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

#include "hamlets/graph_state.hpp"

#include <algorithm>
#include <string>

#include "hamlets/errors.hpp"

namespace hamlets {

GraphState::GraphState(std::size_t n) : adj_(n), live_(n, true), num_live_(n) {}

GraphState::GraphState(const Graph& g) : GraphState(g.num_vertices()) {
  for (const auto& e : g.edges()) toggle(e.u, e.v);
}

void GraphState::require_live(QubitId q) const {
  if (!is_live(q)) throw StateError("qubit " + std::to_string(q) + " is not live");
}

const std::set<QubitId>& GraphState::neighbors(QubitId q) const {
  require_live(q);
  return adj_[q];
}

bool GraphState::has_edge(QubitId a, QubitId b) const {
  return is_live(a) && is_live(b) && adj_[a].contains(b);
}

std::vector<std::pair<QubitId, QubitId>> GraphState::edges() const {
  std::vector<std::pair<QubitId, QubitId>> out;
  out.reserve(num_edges_);
  for (QubitId a = 0; a < adj_.size(); ++a) {
    if (!live_[a]) continue;
    for (QubitId b : adj_[a]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

void GraphState::toggle(QubitId a, QubitId b) {
  if (adj_[a].erase(b)) {
    adj_[b].erase(a);
    --num_edges_;
  } else {
    adj_[a].insert(b);
    adj_[b].insert(a);
    ++num_edges_;
  }
}

void GraphState::record(ProtocolEvent::Kind kind, std::uint32_t a, std::uint32_t b) {
  if (recording_) events_.push_back({kind, a, b});
}

QubitId GraphState::add_plus_qubit() {
  const auto q = static_cast<QubitId>(adj_.size());
  adj_.emplace_back();
  live_.push_back(true);
  ++num_live_;
  record(ProtocolEvent::Kind::kPlus, q);
  return q;
}

void GraphState::apply_cz(QubitId a, QubitId b) {
  if (a == b) throw ParameterError("CZ needs two distinct qubits, got " + std::to_string(a) + " twice");
  require_live(a);
  require_live(b);
  toggle(a, b);
  record(ProtocolEvent::Kind::kCz, a, b);
}

void GraphState::local_complement(QubitId a) {
  require_live(a);
  const std::vector<QubitId> nbrs(adj_[a].begin(), adj_[a].end());
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) toggle(nbrs[i], nbrs[j]);
  }
  record(ProtocolEvent::Kind::kLocalComplement, a);
}

void GraphState::measure_z(QubitId a) {
  require_live(a);
  for (QubitId b : adj_[a]) adj_[b].erase(a);
  num_edges_ -= adj_[a].size();
  adj_[a].clear();
  live_[a] = false;
  --num_live_;
  record(ProtocolEvent::Kind::kMeasureZ, a);
}

void GraphState::measure_y(QubitId a) {
  const bool was_recording = recording_;
  recording_ = false;
  local_complement(a);
  measure_z(a);
  recording_ = was_recording;
  record(ProtocolEvent::Kind::kMeasureY, a);
}

std::pair<QubitId, QubitId> GraphState::bell_pair(Color tag_a, Color tag_b) {
  const bool was_recording = recording_;
  recording_ = false;
  const QubitId qa = add_plus_qubit();
  const QubitId qb = add_plus_qubit();
  toggle(qa, qb);
  recording_ = was_recording;
  ++bell_pairs_used_;
  ++per_pair_bells_[{std::min(tag_a, tag_b), std::max(tag_a, tag_b)}];
  record(ProtocolEvent::Kind::kBell, qa, qb);
  return {qa, qb};
}

void GraphState::note_pair_open(Color a, Color b) { record(ProtocolEvent::Kind::kPairOpen, a, b); }

Graph GraphState::restrict_to(std::size_t n) const {
  if (n > adj_.size()) throw StateError("restrict_to: only " + std::to_string(adj_.size()) + " ids exist");
  GraphBuilder builder(n);
  for (QubitId a = 0; a < n; ++a) {
    require_live(a);
    for (QubitId b : adj_[a]) {
      if (b >= n) {
        throw StateError("qubit " + std::to_string(a) + " is still entangled with ancilla " +
                         std::to_string(b));
      }
      if (a < b) builder.add_edge(a, b);
    }
  }
  return std::move(builder).build();
}

}  // namespace hamlets
