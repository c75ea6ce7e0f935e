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

#include "hamlets/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hamlets/errors.hpp"

namespace hamlets {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits on blanks and parses every token as an unsigned integer.
bool parse_integers(std::string_view line, std::vector<std::uint64_t>& out) {
  out.clear();
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc{}) return false;
    pos = static_cast<std::size_t>(end - line.data());
    if (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') return false;
    out.push_back(value);
  }
  return true;
}

constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << 31;

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::vector<std::pair<Edge, std::size_t>> edges;  // with line numbers
  std::optional<std::uint64_t> declared_n;
  std::uint64_t max_index_plus_one = 0;
  std::string raw;
  std::vector<std::uint64_t> nums;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == 'n' && (line.size() == 1 || line[1] == ' ' || line[1] == '\t')) {
      if (declared_n || !edges.empty()) throw ParseError("header 'n' must come first", line_no);
      if (!parse_integers(line.substr(1), nums) || nums.size() != 1 || nums[0] > kMaxVertices) {
        throw ParseError("malformed header, expected 'n <count>'", line_no);
      }
      declared_n = nums[0];
      continue;
    }
    if (!parse_integers(line, nums) || nums.size() != 2 || nums[0] >= kMaxVertices ||
        nums[1] >= kMaxVertices) {
      throw ParseError("malformed edge, expected 'u v'", line_no);
    }
    if (nums[0] == nums[1]) throw ParseError("self-loop at vertex " + std::to_string(nums[0]), line_no);
    const auto u = static_cast<Vertex>(std::min(nums[0], nums[1]));
    const auto v = static_cast<Vertex>(std::max(nums[0], nums[1]));
    max_index_plus_one = std::max<std::uint64_t>(max_index_plus_one, v + 1);
    edges.push_back({{u, v}, line_no});
  }
  const std::uint64_t n = declared_n.value_or(max_index_plus_one);
  if (max_index_plus_one > n) {
    throw ParseError("edge endpoint " + std::to_string(max_index_plus_one - 1) +
                         " out of range for n=" + std::to_string(n),
                     0);
  }
  GraphBuilder builder(n);
  for (const auto& [e, where] : edges) {
    if (!builder.try_add_edge(e.u, e.v)) {
      throw ParseError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v), where);
    }
  }
  return std::move(builder).build();
}

Graph read_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "n " << g.num_vertices() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_metis_graph(const Graph& g, std::ostream& out) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto nbrs = g.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (i) out << ' ';
      out << nbrs[i] + 1;
    }
    out << '\n';
  }
}

Graph read_metis_graph(std::istream& in) {
  std::string raw;
  std::vector<std::uint64_t> nums;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, raw)) {
      ++line_no;
      if (!trim(raw).empty() && trim(raw).front() == '%') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("empty METIS file", 0);
  if (!parse_integers(trim(raw), nums) || nums.size() < 2) {
    throw ParseError("malformed METIS header, expected 'n m'", line_no);
  }
  if (nums.size() > 2 && nums[2] != 0) throw ParseError("weighted METIS graphs are not supported", line_no);
  const std::uint64_t n = nums[0];
  const std::uint64_t m = nums[1];
  if (n > kMaxVertices) throw ParseError("vertex count too large", line_no);
  GraphBuilder builder(n);
  std::vector<std::size_t> listed(n, 0);
  for (std::uint64_t v = 0; v < n; ++v) {
    if (!next_line()) throw ParseError("expected " + std::to_string(n) + " adjacency lines", 0);
    if (!parse_integers(trim(raw), nums)) throw ParseError("malformed adjacency line", line_no);
    listed[v] = nums.size();
    for (auto w : nums) {
      if (w == 0 || w > n) throw ParseError("neighbor " + std::to_string(w) + " out of range", line_no);
      if (w - 1 == v) throw ParseError("self-loop", line_no);
      const auto a = static_cast<Vertex>(v);
      const auto b = static_cast<Vertex>(w - 1);
      if (a < b) {
        if (!builder.try_add_edge(a, b)) throw ParseError("duplicate neighbor", line_no);
      } else if (!builder.has_edge(a, b)) {
        throw ParseError("asymmetric adjacency: " + std::to_string(w) + " lists no edge back",
                         line_no);
      }
    }
  }
  Graph g = std::move(builder).build();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (listed[v] != g.degree(v)) {
      throw ParseError("asymmetric adjacency at vertex " + std::to_string(v + 1), 0);
    }
  }
  if (g.num_edges() != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges but " +
                         std::to_string(g.num_edges()) + " were listed",
                     0);
  }
  return g;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  const auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           std::string_view(path).substr(path.size() - suffix.size()) == suffix;
  };
  if (ends_with(".graph") || ends_with(".metis")) return read_metis_graph(in);
  return read_edge_list(in);
}

Partition read_partition_file(std::istream& in, std::size_t k,
                              std::optional<std::size_t> expected_n) {
  if (k == 0) throw ParameterError("k must be positive");
  std::vector<Color> colors;
  std::string raw;
  std::vector<std::uint64_t> nums;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) {
      // Blank lines are only allowed as trailing padding.
      std::string rest;
      while (std::getline(in, rest)) {
        ++line_no;
        if (!trim(rest).empty()) throw ParseError("blank line inside partition file", line_no);
      }
      break;
    }
    if (!parse_integers(line, nums) || nums.size() != 1) {
      throw ParseError("expected a single color per line", line_no);
    }
    if (nums[0] >= k) {
      throw ParseError("color " + std::to_string(nums[0]) + " >= k=" + std::to_string(k), line_no);
    }
    colors.push_back(static_cast<Color>(nums[0]));
  }
  if (expected_n && colors.size() != *expected_n) {
    throw ParseError("partition has " + std::to_string(colors.size()) + " lines, expected " +
                         std::to_string(*expected_n),
                     0);
  }
  return Partition(std::move(colors), k);
}

Partition read_partition_file(std::string_view text, std::size_t k,
                              std::optional<std::size_t> expected_n) {
  std::istringstream in{std::string(text)};
  return read_partition_file(in, k, expected_n);
}

void write_partition_file(const Partition& p, std::ostream& out) {
  for (Color c : p.colors()) out << c << '\n';
}

}  // namespace hamlets
