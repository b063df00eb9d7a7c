#include <doctest.h>

#include <sstream>

#include "ktruss/csr.hpp"
#include "ktruss/csr_cache.hpp"
#include "ktruss/edge_list.hpp"
#include "ktruss/errors.hpp"
#include "ktruss/oracle.hpp"
#include "test_helpers.hpp"

using namespace ktruss;

namespace {

std::vector<RawEdge> parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

}  // namespace

TEST_CASE("parse keeps pairs in file order without dedup or orientation") {
  const auto raw = parse_text("# c\n1 2\n2 1\n3 3\n");
  CHECK(raw == std::vector<RawEdge>{{1, 2}, {2, 1}, {3, 3}});
  CHECK(parse_text("5 7\n") == std::vector<RawEdge>{{5, 7}});
}

TEST_CASE("parse skips comments and blank lines, tolerates CRLF and tabs") {
  const auto raw = parse_text("% header\n\n  \n#x\n1\t2\r\n  10   20\n");
  CHECK(raw == std::vector<RawEdge>{{1, 2}, {10, 20}});
}

TEST_CASE("parse errors carry the line number") {
  CHECK_THROWS_AS(parse_text("a b\n"), ParseError);
  try {
    parse_text("1 2\nx 4\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_text("1 2 3\n"), ParseError);   // too many fields
  CHECK_THROWS_AS(parse_text("1\n"), ParseError);       // too few fields
  CHECK_THROWS_AS(parse_text("-1 2\n"), ParseError);    // negative label
  CHECK_THROWS_AS(parse_text("1.5 2\n"), ParseError);   // non-integer
}

TEST_CASE("parse rejects inputs with zero data lines") {
  CHECK_THROWS_AS(parse_text(""), EmptyInputError);
  CHECK_THROWS_AS(parse_text("# only\n% comments\n\n"), EmptyInputError);
}

TEST_CASE("canonicalize dedupes, drops self-loops, relabels densely") {
  const std::vector<RawEdge> raw{{1, 2}, {2, 1}, {3, 3}, {5, 2}};
  const EdgeList graph = canonicalize(raw);
  CHECK(graph.num_vertices == 3);  // vertex 3 only appears in a self-loop
  CHECK(graph.edges == std::vector<Edge>{{1, 2}, {2, 3}});
  CHECK(graph.original_ids == std::vector<std::uint64_t>{0, 1, 2, 5});
}

TEST_CASE("canonicalize orients and sorts a triangle with sparse labels") {
  const std::vector<RawEdge> raw{{10, 20}, {20, 30}, {10, 30}};
  const EdgeList graph = canonicalize(raw);
  CHECK(graph.num_vertices == 3);
  CHECK(graph.edges == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("labels beyond 32 bits survive parsing and relabeling") {
  const auto raw = parse_text("5000000000 6000000000\n6000000000 7000000001\n");
  const EdgeList graph = canonicalize(raw);
  CHECK(graph.num_vertices == 3);
  CHECK(graph.edges == std::vector<Edge>{{1, 2}, {2, 3}});
  CHECK(graph.original_ids ==
        std::vector<std::uint64_t>{0, 5000000000ULL, 6000000000ULL, 7000000001ULL});
}

TEST_CASE("canonicalize rejects graphs with no surviving edges") {
  const std::vector<RawEdge> raw{{7, 7}};
  CHECK_THROWS_AS(canonicalize(raw), EmptyGraphError);
}

TEST_CASE("canonicalize is idempotent") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    const EdgeList graph = oracle::random_graph(24, 0.2, seed);
    std::vector<RawEdge> as_raw;
    for (const Edge& e : graph.edges) {
      as_raw.emplace_back(graph.original_ids[e.u], graph.original_ids[e.v]);
    }
    CHECK(canonicalize(as_raw) == graph);
  }
}

TEST_CASE("build_csr lays out rows with sentinels") {
  SUBCASE("triangle") {
    const ZeroTerminatedCsr csr = build_csr(testing::triangle());
    CHECK(csr.row_ptr == std::vector<std::uint32_t>{0, 0, 3, 5, 6});
    CHECK(csr.col_idx == std::vector<std::uint32_t>{2, 3, 0, 3, 0, 0});
  }
  SUBCASE("single edge") {
    const ZeroTerminatedCsr csr = build_csr(testing::graph_from_pairs({{1, 2}}));
    CHECK(csr.row_ptr == std::vector<std::uint32_t>{0, 0, 2, 3});
    CHECK(csr.col_idx == std::vector<std::uint32_t>{2, 0, 0});
  }
  SUBCASE("path") {
    const ZeroTerminatedCsr csr = build_csr(testing::path3());
    CHECK(csr.row_ptr == std::vector<std::uint32_t>{0, 0, 2, 4, 5});
    CHECK(csr.col_idx == std::vector<std::uint32_t>{2, 0, 3, 0, 0});
  }
}

TEST_CASE("build_csr rejects malformed edge lists") {
  EdgeList bad;
  bad.num_vertices = 2;
  bad.original_ids = {0, 1, 2};
  bad.edges = {{2, 1}};  // not upper-triangular
  CHECK_THROWS_AS(build_csr(bad), InvalidInputError);
  bad.edges = {{1, 2}, {1, 2}};  // duplicate
  CHECK_THROWS_AS(build_csr(bad), InvalidInputError);
  bad.edges = {{1, 3}};  // vertex beyond n
  CHECK_THROWS_AS(build_csr(bad), InvalidInputError);
}

TEST_CASE("extract_edges inverts build_csr and respects pruned slots") {
  const EdgeList graph = testing::triangle();
  ZeroTerminatedCsr csr = build_csr(graph);
  CHECK(extract_edges(csr) == graph.edges);

  const std::vector<std::uint32_t> supports{1, 1, 0, 1, 0, 0};
  CHECK(extract_edges(csr, supports) ==
        std::vector<SupportedEdge>{{1, 2, 1}, {1, 3, 1}, {2, 3, 1}});

  std::fill(csr.col_idx.begin(), csr.col_idx.end(), 0u);
  CHECK(extract_edges(csr).empty());
}

TEST_CASE("round-trip and slot accounting hold on random graphs") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const EdgeList graph = oracle::random_graph(40, 0.15, seed);
    const ZeroTerminatedCsr csr = build_csr(graph);
    CHECK(csr.total_slots() == graph.edges.size() + graph.num_vertices);
    CHECK(extract_edges(csr) == graph.edges);
    validate_csr(csr);
    for (std::uint32_t v = 1; v <= csr.num_vertices; ++v) {
      for (std::uint32_t slot = csr.row_ptr[v]; csr.col_idx[slot] != 0; ++slot) {
        CHECK(csr.col_idx[slot] > v);
      }
    }
  }
}

TEST_CASE("validate_csr flags each broken invariant") {
  const ZeroTerminatedCsr good = build_csr(testing::triangle());
  validate_csr(good);

  ZeroTerminatedCsr bad = good;
  bad.col_idx[5] = 7;  // last slot of row 3 must be zero
  CHECK_THROWS_AS(validate_csr(bad), InvalidInputError);

  bad = good;
  bad.col_idx[0] = 0;  // zero before a live entry
  CHECK_THROWS_AS(validate_csr(bad), InvalidInputError);

  bad = good;
  bad.col_idx[0] = 3;
  bad.col_idx[1] = 2;  // descending entries
  CHECK_THROWS_AS(validate_csr(bad), InvalidInputError);

  bad = good;
  bad.col_idx[3] = 2;  // entry not above row vertex
  CHECK_THROWS_AS(validate_csr(bad), InvalidInputError);

  bad = good;
  bad.row_ptr[1] = 1;  // phantom vertex must own nothing
  CHECK_THROWS_AS(validate_csr(bad), InvalidInputError);
}

TEST_CASE("csr cache round-trips bit-exactly") {
  for (std::uint64_t seed : {1u, 9u}) {
    const ZeroTerminatedCsr csr = build_csr(oracle::random_graph(30, 0.2, seed));
    std::stringstream buffer;
    write_csr_cache(csr, buffer);
    const ZeroTerminatedCsr loaded = read_csr_cache(buffer);
    CHECK(loaded.num_vertices == csr.num_vertices);
    CHECK(loaded.row_ptr == csr.row_ptr);
    CHECK(loaded.col_idx == csr.col_idx);
  }
}

TEST_CASE("csr cache layout is pinned byte for byte") {
  const ZeroTerminatedCsr csr = build_csr(testing::graph_from_pairs({{1, 2}}));
  std::stringstream buffer;
  write_csr_cache(csr, buffer);
  const std::string bytes = buffer.str();
  const std::string expected{
      'Z', 'T',  'C', 'S', 'R', '1', '\0', '\0',         // magic
      2,   0,    0,   0,                                  // num_vertices
      3,   0,    0,   0,   0,  0,   0,    0,              // total_slots
      0,   0,    0,   0,   0,  0,   0,    0,              // row_ptr[0..1]
      2,   0,    0,   0,   3,  0,   0,    0,              // row_ptr[2..3]
      2,   0,    0,   0,   0,  0,   0,    0,  0, 0, 0, 0  // col_idx
  };
  CHECK(bytes == expected);
}

TEST_CASE("csr cache rejects corruption") {
  const ZeroTerminatedCsr csr = build_csr(testing::triangle());
  std::stringstream buffer;
  write_csr_cache(csr, buffer);
  const std::string good = buffer.str();

  SUBCASE("short file") {
    std::istringstream in(good.substr(0, 4));
    CHECK_THROWS_AS(read_csr_cache(in), CorruptCacheError);
  }
  SUBCASE("bad magic") {
    std::string bytes = good;
    bytes[0] = 'X';
    std::istringstream in(bytes);
    CHECK_THROWS_AS(read_csr_cache(in), CorruptCacheError);
  }
  SUBCASE("truncated payload") {
    std::istringstream in(good.substr(0, good.size() - 3));
    CHECK_THROWS_AS(read_csr_cache(in), CorruptCacheError);
  }
  SUBCASE("trailing bytes") {
    std::istringstream in(good + "x");
    CHECK_THROWS_AS(read_csr_cache(in), CorruptCacheError);
  }
  SUBCASE("row without a sentinel") {
    std::string bytes = good;
    bytes[bytes.size() - 4] = 9;  // last col_idx entry (row 3's sentinel)
    std::istringstream in(bytes);
    CHECK_THROWS_AS(read_csr_cache(in), CorruptCacheError);
  }
}
