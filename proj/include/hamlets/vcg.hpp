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
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hamlets/graph.hpp"
#include "hamlets/graph_state.hpp"
#include "hamlets/metrics.hpp"
#include "hamlets/partition.hpp"

namespace hamlets {

/// Creates the edges v - n_i for every n_i in `remote` with one Bell pair:
/// the mayors (Mv, Mn) are entangled, Mv is coupled to v and Mn to each
/// n_i, then Mn and Mv are Y-measured in that order. The first measurement
/// complements the edges among the n_i and the second complements them back,
/// so no preexisting edge changes.
///
/// Throws ProtocolError if a listed edge v - n_i already exists, if
/// `remote` is empty or contains v, or if any qubit is dead.
void graft_star(GraphState& state, QubitId v, std::span<const QubitId> remote, ColorPair pair);

struct VcgTrace {
  std::size_t bell_pairs_used = 0;
  std::map<ColorPair, std::size_t> per_pair_bells;
  std::vector<ProtocolEvent> ops;
};

struct VcgResult {
  GraphState state;
  VcgTrace trace;
};

/// Vertex cover grafting without the final check. Hamlet pairs are visited in order a < b; for each
/// pair the Konig cover of its cross edges is grafted vertex by vertex in
/// ascending id, each graft covering only cross edges not yet created.
/// Intra-hamlet edges are added by local CZs at the end.
VcgResult execute_vcg(const Graph& g, const Partition& p);

struct VcgCheck {
  bool ancillas_measured = false;
  bool state_matches = false;
  bool bell_count_matches = false;
  std::size_t expected_bells = 0;
  /// Edges of g absent from the final state, and final-state edges not in g.
  std::vector<Edge> missing;
  std::vector<Edge> extra;

  bool ok() const { return ancillas_measured && state_matches && bell_count_matches; }
};

/// Compares a VCG run against its target graph and the matching sum of the
/// partition.
VcgCheck check_vcg(const Graph& g, const Partition& p, const VcgResult& result);

/// execute_vcg followed by check_vcg. Throws ProtocolError on any mismatch.
VcgResult run_vcg(const Graph& g, const Partition& p);

/// Trace text: "INIT n", then one line per event ("PAIR a b", "BELL qa qb",
/// "CZ u v", "Y q", "Z q", "LC q", "PLUS q").
void write_trace(std::span<const ProtocolEvent> events, std::size_t initial_qubits,
                 std::ostream& out);

/// Re-executes a trace written by write_trace on a fresh state.
GraphState replay_trace(std::istream& in);

}  // namespace hamlets
