#include <doctest.h>

#include <algorithm>
#include <map>

#include "ktruss/errors.hpp"
#include "ktruss/oracle.hpp"
#include "test_helpers.hpp"

using namespace ktruss;

TEST_CASE("oracle supports on fixed graphs") {
  for (const auto& [edge, support] : oracle::edge_supports(testing::triangle())) {
    CHECK(support == 1);
  }
  for (const auto& [edge, support] : oracle::edge_supports(testing::complete(4))) {
    CHECK(support == 2);
  }
  // star: center 1, leaves 2..5, triangle-free
  const EdgeList star = testing::graph_from_pairs({{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  for (const auto& [edge, support] : oracle::edge_supports(star)) {
    CHECK(support == 0);
  }
}

TEST_CASE("oracle peeling matches the truss definition") {
  const EdgeList k4p = testing::complete_with_pendant(4);
  const auto survivors = oracle::ktruss_edges(k4p, 3);
  CHECK(survivors == testing::complete(4).edges);

  CHECK(oracle::ktruss_edges(k4p, 2) == k4p.edges);  // threshold 0 keeps everything
  CHECK(oracle::ktruss_edges(testing::bowtie(), 4).empty());
  CHECK_THROWS_AS(oracle::ktruss_edges(k4p, 1), InvalidParameterError);
}

TEST_CASE("oracle peeling reaches a fixpoint") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const EdgeList graph = oracle::random_graph(30, 0.25, seed);
    for (std::uint32_t k = 3; k <= 5; ++k) {
      const auto survivors = oracle::ktruss_edges(graph, k);
      if (survivors.empty()) continue;
      EdgeList sub;
      sub.num_vertices = graph.num_vertices;
      sub.edges = survivors;
      sub.original_ids = graph.original_ids;
      CHECK(oracle::ktruss_edges(sub, k) == survivors);
      // monotone: the (k+1)-truss is contained in the k-truss
      const auto tighter = oracle::ktruss_edges(graph, k + 1);
      CHECK(std::includes(survivors.begin(), survivors.end(), tighter.begin(), tighter.end()));
    }
  }
}

TEST_CASE("oracle kmax on fixed graphs") {
  CHECK(oracle::kmax(testing::complete(5)) == 5);
  CHECK(oracle::kmax(testing::path3()) == 2);
  const EdgeList two_triangles =
      testing::graph_from_pairs({{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
  CHECK(oracle::kmax(two_triangles) == 3);
}

TEST_CASE("oracle supports are permutation-equivariant") {
  const EdgeList graph = oracle::random_graph(20, 0.3, 11);
  const auto base = oracle::edge_supports(graph);

  // relabel v -> n+1-v
  const std::uint32_t n = graph.num_vertices;
  std::vector<Edge> permuted;
  for (const Edge& e : graph.edges) {
    const std::uint32_t pu = n + 1 - e.u;
    const std::uint32_t pv = n + 1 - e.v;
    permuted.push_back(pu < pv ? Edge{pu, pv} : Edge{pv, pu});
  }
  std::sort(permuted.begin(), permuted.end());
  const auto mapped = oracle::edge_supports(n, permuted);

  for (const auto& [edge, support] : base) {
    const std::uint32_t pu = n + 1 - edge.u;
    const std::uint32_t pv = n + 1 - edge.v;
    const Edge image = pu < pv ? Edge{pu, pv} : Edge{pv, pu};
    CHECK(mapped.at(image) == support);
  }
}

TEST_CASE("random_graph is deterministic and honors p") {
  const EdgeList a = oracle::random_graph(50, 0.2, 7);
  const EdgeList b = oracle::random_graph(50, 0.2, 7);
  CHECK(a == b);
  CHECK(a.edges.size() <= 1225);

  const EdgeList full = oracle::random_graph(10, 1.0, 3);
  CHECK(full.num_vertices == 10);
  CHECK(full.edges.size() == 45);

  CHECK(oracle::random_graph(12, 0.4, 5) != oracle::random_graph(12, 0.4, 6));
  CHECK_THROWS_AS(oracle::random_graph(8, 0.0, 1), EmptyGraphError);
  CHECK_THROWS_AS(oracle::random_graph(1, 0.5, 1), InvalidParameterError);
  CHECK_THROWS_AS(oracle::random_graph(8, 1.5, 1), InvalidParameterError);
}
