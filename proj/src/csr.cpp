#include "ktruss/csr.hpp"

#include <limits>
#include <string>

#include "ktruss/errors.hpp"

namespace ktruss {

ZeroTerminatedCsr build_csr(const EdgeList& graph) {
  validate_edge_list(graph);

  const std::uint32_t n = graph.num_vertices;
  const std::uint64_t slots = static_cast<std::uint64_t>(graph.edges.size()) + n;
  if (slots > std::numeric_limits<std::uint32_t>::max()) {
    throw InvalidInputError("graph exceeds 2^32-1 CSR slots");
  }

  ZeroTerminatedCsr csr;
  csr.num_vertices = n;
  csr.row_ptr.assign(n + std::size_t{2}, 0);

  // Row widths: out-degree plus one sentinel slot.
  for (const Edge& e : graph.edges) ++csr.row_ptr[e.u + 1];
  for (std::uint32_t v = 1; v <= n; ++v) ++csr.row_ptr[v + 1];
  for (std::uint32_t v = 1; v <= n + 1; ++v) csr.row_ptr[v] += csr.row_ptr[v - 1];

  csr.col_idx.assign(static_cast<std::size_t>(slots), 0);
  std::vector<std::uint32_t> cursor(csr.row_ptr.begin(), csr.row_ptr.end());
  for (const Edge& e : graph.edges) csr.col_idx[cursor[e.u]++] = e.v;
  return csr;
}

void validate_csr(const ZeroTerminatedCsr& graph) {
  const std::uint32_t n = graph.num_vertices;
  if (n == 0) throw InvalidInputError("csr has no vertices");
  if (graph.row_ptr.size() != n + std::size_t{2}) {
    throw InvalidInputError("row_ptr must have num_vertices + 2 entries");
  }
  if (graph.row_ptr[0] != 0 || graph.row_ptr[1] != 0) {
    throw InvalidInputError("phantom vertex 0 must own no slots");
  }
  if (graph.col_idx.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw InvalidInputError("slot count exceeds 32-bit offsets");
  }
  if (graph.row_ptr[n + 1] != graph.col_idx.size()) {
    throw InvalidInputError("row_ptr end does not match slot count");
  }

  for (std::uint32_t v = 1; v <= n; ++v) {
    const std::uint32_t begin = graph.row_ptr[v];
    const std::uint32_t end = graph.row_ptr[v + 1];
    if (begin >= end) {
      throw InvalidInputError("row " + std::to_string(v) + " owns no sentinel slot");
    }
    if (graph.col_idx[end - 1] != 0) {
      throw InvalidInputError("row " + std::to_string(v) + " does not end in a zero slot");
    }
    std::uint32_t prev = v;  // entries must exceed the row vertex
    bool in_zero_tail = false;
    for (std::uint32_t slot = begin; slot < end; ++slot) {
      const std::uint32_t w = graph.col_idx[slot];
      if (w == 0) {
        in_zero_tail = true;
        continue;
      }
      if (in_zero_tail) {
        throw InvalidInputError("row " + std::to_string(v) + " has a nonzero after a zero slot");
      }
      if (w <= prev) {
        throw InvalidInputError("row " + std::to_string(v) +
                                " entries are not strictly ascending above the vertex");
      }
      if (w > n) {
        throw InvalidInputError("row " + std::to_string(v) + " references vertex beyond n");
      }
      prev = w;
    }
  }
}

std::vector<Edge> extract_edges(const ZeroTerminatedCsr& graph) {
  std::vector<Edge> edges;
  edges.reserve(graph.total_slots() - graph.num_vertices);
  for (std::uint32_t v = 1; v <= graph.num_vertices; ++v) {
    for (std::uint32_t slot = graph.row_ptr[v]; graph.col_idx[slot] != 0; ++slot) {
      edges.push_back(Edge{v, graph.col_idx[slot]});
    }
  }
  return edges;
}

std::vector<SupportedEdge> extract_edges(const ZeroTerminatedCsr& graph,
                                         std::span<const std::uint32_t> supports) {
  if (supports.size() != graph.total_slots()) {
    throw InvalidParameterError("support array does not match slot count");
  }
  std::vector<SupportedEdge> edges;
  edges.reserve(graph.total_slots() - graph.num_vertices);
  for (std::uint32_t v = 1; v <= graph.num_vertices; ++v) {
    for (std::uint32_t slot = graph.row_ptr[v]; graph.col_idx[slot] != 0; ++slot) {
      edges.push_back(SupportedEdge{v, graph.col_idx[slot], supports[slot]});
    }
  }
  return edges;
}

std::uint64_t count_live_edges(const ZeroTerminatedCsr& graph) noexcept {
  std::uint64_t live = 0;
  for (std::uint32_t v = 1; v <= graph.num_vertices; ++v) {
    for (std::uint32_t slot = graph.row_ptr[v]; graph.col_idx[slot] != 0; ++slot) ++live;
  }
  return live;
}

}  // namespace ktruss
