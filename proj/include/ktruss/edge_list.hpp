#pragma once

#include <compare>
#include <cstdint>
#include <istream>
#include <span>
#include <utility>
#include <vector>

namespace ktruss {

// Relabeled undirected edge, always u < v, ids 1-based (0 is reserved as the
// CSR sentinel value).
struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct SupportedEdge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  std::uint32_t support = 0;
  friend auto operator<=>(const SupportedEdge&, const SupportedEdge&) = default;
};

// Vertex label pair exactly as read from an input file.
using RawEdge = std::pair<std::uint64_t, std::uint64_t>;

// Canonical undirected simple graph: vertices densely relabeled to 1..n in
// ascending order of their original labels, edges oriented u < v, deduplicated
// and sorted lexicographically.
struct EdgeList {
  std::uint32_t num_vertices = 0;
  std::vector<Edge> edges;
  // original_ids[v] is the source-file label of relabeled vertex v, for
  // v in 1..num_vertices; original_ids[0] is unused.
  std::vector<std::uint64_t> original_ids;

  friend bool operator==(const EdgeList&, const EdgeList&) = default;
};

// Reads "u v" lines; '#'/'%' lines are comments, blank lines are skipped.
// Keeps pairs in file order, no deduplication or orientation.
// Throws ParseError (with line number) or EmptyInputError.
std::vector<RawEdge> parse_edge_list(std::istream& in);

// Drops self-loops, merges (u,v)/(v,u), relabels, orients, dedupes, sorts.
// Throws EmptyGraphError if no edge survives.
EdgeList canonicalize(std::span<const RawEdge> raw);

// Defensive check of all EdgeList invariants; throws InvalidInputError.
void validate_edge_list(const EdgeList& graph);

}  // namespace ktruss
