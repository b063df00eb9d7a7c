#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "ktruss/edge_list.hpp"

// Brute-force reference implementations for desk-scale verification. These
// deliberately share no code with the CSR kernels: full symmetric adjacency
// sets, plain set intersections, no parallelism.
namespace ktruss::oracle {

// Full (symmetric) sorted neighbor sets; neighbors[0] is unused.
struct AdjacencySets {
  std::vector<std::vector<std::uint32_t>> neighbors;
};

AdjacencySets build_adjacency(std::uint32_t num_vertices, std::span<const Edge> edges);

// support(u,v) = |N(u) ∩ N(v)| by direct sorted-set intersection.
std::map<Edge, std::uint32_t> edge_supports(std::uint32_t num_vertices,
                                            std::span<const Edge> edges);
std::map<Edge, std::uint32_t> edge_supports(const EdgeList& graph);

// Iterative batch peeling: repeatedly delete every edge with support < k-2
// until stable. Requires k >= 2.
std::vector<Edge> ktruss_edges(const EdgeList& graph, std::uint32_t k);

// Linear upward scan for the largest k with a non-empty k-truss.
std::uint32_t kmax(const EdgeList& graph);

// Total triangle count (sum of edge supports / 3).
std::uint64_t triangle_count(const EdgeList& graph);

// Seeded Erdős–Rényi G(n,p), canonicalized. Same seed, same graph. Resamples
// deterministically if a draw yields no edges; throws EmptyGraphError if that
// keeps happening (e.g. p = 0).
EdgeList random_graph(std::uint32_t n, double edge_probability, std::uint64_t seed);

}  // namespace ktruss::oracle
