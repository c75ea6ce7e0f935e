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

#include "hamlets/vcg.hpp"

#include <algorithm>
#include <iterator>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "hamlets/errors.hpp"
#include "hamlets/matching.hpp"

namespace hamlets {

void graft_star(GraphState& state, QubitId v, std::span<const QubitId> remote, ColorPair pair) {
  if (remote.empty()) throw ProtocolError("graft_star: no remote neighbors given");
  if (!state.is_live(v)) throw ProtocolError("graft_star: cover vertex " + std::to_string(v) + " is not live");
  for (QubitId n : remote) {
    if (n == v || !state.is_live(n)) {
      throw ProtocolError("graft_star: remote neighbor " + std::to_string(n) + " is invalid");
    }
    if (state.has_edge(v, n)) {
      throw ProtocolError("graft_star: edge " + std::to_string(v) + " - " + std::to_string(n) +
                          " already exists");
    }
  }
  const auto [mayor_v, mayor_n] = state.bell_pair(pair.first, pair.second);
  state.apply_cz(v, mayor_v);
  for (QubitId n : remote) state.apply_cz(n, mayor_n);
  state.measure_y(mayor_n);
  state.measure_y(mayor_v);
}

VcgResult execute_vcg(const Graph& g, const Partition& p) {
  if (p.size() != g.num_vertices()) {
    throw ParameterError("partition covers " + std::to_string(p.size()) +
                         " vertices but the graph has " + std::to_string(g.num_vertices()));
  }
  const std::size_t n = g.num_vertices();
  GraphState state(n);
  state.set_recording(true);

  const auto k = static_cast<Color>(p.k());
  std::vector<QubitId> remote;
  for (Color a = 0; a < k; ++a) {
    for (Color b = a + 1; b < k; ++b) {
      const auto bg = cross_graph(g, p, a, b);
      if (bg.edges.empty()) continue;
      state.note_pair_open(a, b);
      const auto cover = hopcroft_karp(bg);
      for (Vertex v : cover.cover) {
        const Color other = p.color(v) == a ? b : a;
        remote.clear();
        for (Vertex w : g.neighbors(v)) {
          if (p.color(w) == other && !state.has_edge(v, w)) remote.push_back(w);
        }
        if (!remote.empty()) graft_star(state, v, remote, {a, b});
      }
    }
  }
  for (const auto& e : g.edges()) {
    if (p.color(e.u) == p.color(e.v)) state.apply_cz(e.u, e.v);
  }

  VcgResult result;
  result.trace.bell_pairs_used = state.bell_pairs_used();
  result.trace.per_pair_bells = state.bells_per_pair();
  result.trace.ops.assign(state.events().begin(), state.events().end());
  result.state = std::move(state);
  return result;
}

VcgCheck check_vcg(const Graph& g, const Partition& p, const VcgResult& result) {
  VcgCheck check;
  const std::size_t n = g.num_vertices();
  const auto& state = result.state;
  check.ancillas_measured = state.num_live() == n;
  for (QubitId q = 0; q < n; ++q) {
    if (!state.is_live(q)) {
      check.ancillas_measured = false;
      break;
    }
  }
  if (check.ancillas_measured) {
    const auto target = g.edges();
    std::vector<Edge> produced;
    for (const auto& [a, b] : state.edges()) produced.push_back({a, b});
    std::set_difference(target.begin(), target.end(), produced.begin(), produced.end(),
                        std::back_inserter(check.missing));
    std::set_difference(produced.begin(), produced.end(), target.begin(), target.end(),
                        std::back_inserter(check.extra));
    check.state_matches = check.missing.empty() && check.extra.empty();
  }
  check.expected_bells = evaluate(g, p, {.matchings = true, .cut_ranks = false}).matching_sum;
  check.bell_count_matches = result.trace.bell_pairs_used == check.expected_bells;
  return check;
}

VcgResult run_vcg(const Graph& g, const Partition& p) {
  auto result = execute_vcg(g, p);
  const auto check = check_vcg(g, p, result);
  if (!check.ancillas_measured) throw ProtocolError("VCG left ancilla qubits unmeasured");
  if (!check.state_matches) {
    throw ProtocolError("VCG produced a state different from the target graph (" +
                        std::to_string(check.missing.size()) + " missing, " +
                        std::to_string(check.extra.size()) + " extra edges)");
  }
  if (!check.bell_count_matches) {
    throw ProtocolError("VCG used " + std::to_string(result.trace.bell_pairs_used) +
                        " Bell pairs but the matchings sum to " +
                        std::to_string(check.expected_bells));
  }
  return result;
}

void write_trace(std::span<const ProtocolEvent> events, std::size_t initial_qubits,
                 std::ostream& out) {
  using Kind = ProtocolEvent::Kind;
  out << "INIT " << initial_qubits << '\n';
  for (const auto& e : events) {
    switch (e.kind) {
      case Kind::kPairOpen: out << "PAIR " << e.a << ' ' << e.b << '\n'; break;
      case Kind::kBell: out << "BELL " << e.a << ' ' << e.b << '\n'; break;
      case Kind::kPlus: out << "PLUS " << e.a << '\n'; break;
      case Kind::kCz: out << "CZ " << e.a << ' ' << e.b << '\n'; break;
      case Kind::kLocalComplement: out << "LC " << e.a << '\n'; break;
      case Kind::kMeasureZ: out << "Z " << e.a << '\n'; break;
      case Kind::kMeasureY: out << "Y " << e.a << '\n'; break;
    }
  }
}

GraphState replay_trace(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<GraphState> state;
  ColorPair pair{0, 0};
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream line(raw);
    std::string op;
    if (!(line >> op) || op.front() == '#') continue;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    const bool binary = op == "PAIR" || op == "BELL" || op == "CZ";
    if (!(line >> a) || (binary && !(line >> b))) throw ParseError("malformed trace line", line_no);
    std::string extra;
    if (line >> extra) throw ParseError("trailing text in trace line", line_no);
    if (op == "INIT") {
      if (state) throw ParseError("repeated INIT", line_no);
      state.emplace(static_cast<std::size_t>(a));
      continue;
    }
    if (!state) throw ParseError("trace must start with INIT", line_no);
    const auto qa = static_cast<QubitId>(a);
    const auto qb = static_cast<QubitId>(b);
    if (op == "PAIR") {
      pair = {static_cast<Color>(a), static_cast<Color>(b)};
    } else if (op == "BELL") {
      const auto got = state->bell_pair(pair.first, pair.second);
      if (got != std::pair{qa, qb}) throw ParseError("BELL ids do not match replay allocation", line_no);
    } else if (op == "PLUS") {
      if (state->add_plus_qubit() != qa) throw ParseError("PLUS id does not match replay allocation", line_no);
    } else if (op == "CZ") {
      state->apply_cz(qa, qb);
    } else if (op == "LC") {
      state->local_complement(qa);
    } else if (op == "Z") {
      state->measure_z(qa);
    } else if (op == "Y") {
      state->measure_y(qa);
    } else {
      throw ParseError("unknown trace op '" + op + "'", line_no);
    }
  }
  if (!state) throw ParseError("trace has no INIT line", 0);
  return std::move(*state);
}

}  // namespace hamlets
