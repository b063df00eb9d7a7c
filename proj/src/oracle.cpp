#include "ktruss/oracle.hpp"

#include <algorithm>
#include <random>

#include "ktruss/errors.hpp"

namespace ktruss::oracle {

AdjacencySets build_adjacency(std::uint32_t num_vertices, std::span<const Edge> edges) {
  AdjacencySets adjacency;
  adjacency.neighbors.resize(num_vertices + std::size_t{1});
  for (const Edge& e : edges) {
    adjacency.neighbors[e.u].push_back(e.v);
    adjacency.neighbors[e.v].push_back(e.u);
  }
  for (auto& list : adjacency.neighbors) std::sort(list.begin(), list.end());
  return adjacency;
}

namespace {

std::uint32_t common_neighbors(const std::vector<std::uint32_t>& a,
                               const std::vector<std::uint32_t>& b) {
  std::uint32_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) {
      ++count;
      ++ia;
      ++ib;
    } else if (*ia < *ib) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return count;
}

}  // namespace

std::map<Edge, std::uint32_t> edge_supports(std::uint32_t num_vertices,
                                            std::span<const Edge> edges) {
  const AdjacencySets adjacency = build_adjacency(num_vertices, edges);
  std::map<Edge, std::uint32_t> supports;
  for (const Edge& e : edges) {
    supports[e] = common_neighbors(adjacency.neighbors[e.u], adjacency.neighbors[e.v]);
  }
  return supports;
}

std::map<Edge, std::uint32_t> edge_supports(const EdgeList& graph) {
  return edge_supports(graph.num_vertices, graph.edges);
}

std::vector<Edge> ktruss_edges(const EdgeList& graph, std::uint32_t k) {
  if (k < 2) throw InvalidParameterError("k must be >= 2");
  const std::uint32_t threshold = k - 2;

  // Batch peeling: delete every below-threshold edge simultaneously, then
  // recompute from scratch. The k-truss is unique, so order cannot matter.
  std::vector<Edge> current = graph.edges;
  for (;;) {
    const auto supports = edge_supports(graph.num_vertices, current);
    std::vector<Edge> kept;
    kept.reserve(current.size());
    for (const Edge& e : current) {
      if (supports.at(e) >= threshold) kept.push_back(e);
    }
    if (kept.size() == current.size()) return current;
    current = std::move(kept);
  }
}

std::uint32_t kmax(const EdgeList& graph) {
  std::uint32_t k = 2;
  while (!ktruss_edges(graph, k + 1).empty()) ++k;
  return k;
}

std::uint64_t triangle_count(const EdgeList& graph) {
  std::uint64_t support_sum = 0;
  for (const auto& [edge, support] : edge_supports(graph)) support_sum += support;
  return support_sum / 3;  // each triangle contributes to exactly three edges
}

EdgeList random_graph(std::uint32_t n, double edge_probability, std::uint64_t seed) {
  if (n < 2) throw InvalidParameterError("random_graph needs n >= 2");
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw InvalidParameterError("edge probability must be in [0, 1]");
  }

  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    std::mt19937_64 gen(seed + attempt * 0x9E3779B97F4A7C15ULL);
    std::vector<RawEdge> raw;
    for (std::uint32_t u = 1; u <= n; ++u) {
      for (std::uint32_t v = u + 1; v <= n; ++v) {
        // 53-bit uniform draw in [0,1); avoids distribution objects so the
        // sequence is identical on every standard library.
        const double unit = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        if (unit < edge_probability) raw.emplace_back(u, v);
      }
    }
    if (!raw.empty()) return canonicalize(raw);
  }
  throw EmptyGraphError("random_graph drew no edges");
}

}  // namespace ktruss::oracle
