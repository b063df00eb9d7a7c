#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ktruss/edge_list.hpp"

namespace ktruss {

// Upper-triangular adjacency in CSR form where every row is terminated by a
// zero slot. Vertex ids start at 1 so the value 0 can mean "end of row /
// pruned entry" without ambiguity. Row v (for v in 1..num_vertices) spans
// slots [row_ptr[v], row_ptr[v+1]); its live neighbors w > v come first in
// strictly ascending order, followed by zero slots. Vertex 0 is a phantom
// with an empty row, so row_ptr can be indexed directly by any column value.
struct ZeroTerminatedCsr {
  std::uint32_t num_vertices = 0;      // real vertices are 1..num_vertices
  std::vector<std::uint32_t> row_ptr;  // num_vertices + 2 entries
  std::vector<std::uint32_t> col_idx;  // total_slots entries

  std::size_t total_slots() const noexcept { return col_idx.size(); }
};

// total_slots == |edges| + num_vertices (one sentinel per real row).
// Rejects inputs whose slot count would not fit 32-bit offsets.
ZeroTerminatedCsr build_csr(const EdgeList& graph);

// Checks every structural invariant (sentinel-terminated rows, zero-prefix-
// free, ascending upper-triangular entries, offset bounds).
// Throws InvalidInputError naming the first violation.
void validate_csr(const ZeroTerminatedCsr& graph);

// Live (non-pruned) edges in lexicographic order.
std::vector<Edge> extract_edges(const ZeroTerminatedCsr& graph);

// Same, with the per-slot support attached to each edge.
std::vector<SupportedEdge> extract_edges(const ZeroTerminatedCsr& graph,
                                         std::span<const std::uint32_t> supports);

std::uint64_t count_live_edges(const ZeroTerminatedCsr& graph) noexcept;

}  // namespace ktruss
