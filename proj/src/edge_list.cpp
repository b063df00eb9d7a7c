#include "ktruss/edge_list.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <string>
#include <string_view>

#include "ktruss/errors.hpp"

namespace ktruss {

namespace {

bool parse_label(std::string_view token, std::uint64_t& value) {
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

std::vector<RawEdge> parse_edge_list(std::istream& in) {
  std::vector<RawEdge> raw;
  std::string line;
  std::size_t line_number = 0;

  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::string_view rest(line);
    const std::size_t start = rest.find_first_not_of(" \t");
    if (start == std::string_view::npos) continue;  // blank
    if (rest[start] == '#' || rest[start] == '%') continue;

    std::array<std::string_view, 2> tokens;
    std::size_t token_count = 0;
    std::size_t pos = start;
    while (pos < rest.size()) {
      const std::size_t end = std::min(rest.find_first_of(" \t", pos), rest.size());
      if (token_count == 2) throw ParseError(line_number, "expected two fields");
      tokens[token_count++] = rest.substr(pos, end - pos);
      pos = rest.find_first_not_of(" \t", end);
      if (pos == std::string_view::npos) break;
    }
    if (token_count != 2) throw ParseError(line_number, "expected two fields");

    RawEdge edge;
    if (!parse_label(tokens[0], edge.first) || !parse_label(tokens[1], edge.second)) {
      throw ParseError(line_number, "vertex labels must be non-negative integers");
    }
    raw.push_back(edge);
  }

  if (raw.empty()) throw EmptyInputError("input holds no edge lines");
  return raw;
}

EdgeList canonicalize(std::span<const RawEdge> raw) {
  // Self-loops are dropped before label collection, so a vertex that only
  // appears in self-loops does not survive relabeling.
  std::vector<std::uint64_t> labels;
  labels.reserve(raw.size() * 2);
  for (const auto& [a, b] : raw) {
    if (a == b) continue;
    labels.push_back(a);
    labels.push_back(b);
  }
  if (labels.empty()) throw EmptyGraphError("no edges survive canonicalization");

  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.size() > std::numeric_limits<std::uint32_t>::max() - 1) {
    throw InvalidInputError("vertex count exceeds 32-bit id space");
  }
  const auto num_vertices = static_cast<std::uint32_t>(labels.size());

  const auto relabel = [&labels](std::uint64_t label) {
    const auto it = std::lower_bound(labels.begin(), labels.end(), label);
    return static_cast<std::uint32_t>(it - labels.begin()) + 1;
  };

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [a, b] : raw) {
    if (a == b) continue;
    const std::uint32_t u = relabel(a);
    const std::uint32_t v = relabel(b);
    edges.push_back(u < v ? Edge{u, v} : Edge{v, u});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  EdgeList graph;
  graph.num_vertices = num_vertices;
  graph.edges = std::move(edges);
  graph.original_ids.resize(num_vertices + std::size_t{1}, 0);
  for (std::uint32_t v = 1; v <= num_vertices; ++v) graph.original_ids[v] = labels[v - 1];
  return graph;
}

void validate_edge_list(const EdgeList& graph) {
  if (graph.num_vertices == 0) throw InvalidInputError("edge list has no vertices");
  if (graph.edges.empty()) throw InvalidInputError("edge list has no edges");
  if (graph.original_ids.size() != graph.num_vertices + std::size_t{1}) {
    throw InvalidInputError("original_ids size mismatch");
  }
  const Edge* prev = nullptr;
  for (const Edge& e : graph.edges) {
    if (e.u == 0 || e.u >= e.v || e.v > graph.num_vertices) {
      throw InvalidInputError("edge is not strictly upper-triangular in 1..n");
    }
    if (prev != nullptr && !(*prev < e)) {
      throw InvalidInputError("edges are not sorted and deduplicated");
    }
    prev = &e;
  }
}

}  // namespace ktruss
