#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ktruss/csr.hpp"
#include "ktruss/support.hpp"

namespace ktruss {

struct BenchRecord {
  std::string graph_name;
  std::uint32_t num_vertices = 0;
  std::uint64_t num_edges = 0;  // canonicalized input edges, sentinels excluded
  std::uint32_t k = 0;          // literal value, or the resolved Kmax
  Strategy strategy = Strategy::Fine;
  int threads = 1;
  int trials = 1;
  double mean_ms = 0.0;   // mean wall time of the fixpoint loop only
  double me_per_s = 0.0;  // millions of edges processed per second
};

// num_edges / (mean_ms * 1000): millions of original edges per second of
// truss-loop wall time.
double millions_of_edges_per_second(std::uint64_t num_edges, double mean_ms) noexcept;

// k_spec: a literal k, or nullopt to resolve Kmax first (untimed). Runs one
// untimed warm-up, then `trials` independent runs, each from a fresh copy of
// the pristine graph; only the fixpoint loop is timed.
BenchRecord run_bench(const ZeroTerminatedCsr& graph, std::optional<std::uint32_t> k_spec,
                      Strategy strategy, int threads, int trials,
                      const std::string& graph_name);

// run_bench once per thread count; records come back ordered by thread count.
std::vector<BenchRecord> thread_sweep(const ZeroTerminatedCsr& graph,
                                      std::optional<std::uint32_t> k_spec, Strategy strategy,
                                      std::span<const int> thread_counts, int trials,
                                      const std::string& graph_name);

enum class RecordFormat { Csv, Markdown };

// CSV header: graph,vertices,edges,k,strategy,threads,trials,mean_ms,me_per_s
// Markdown carries the same columns. Floats print with 3 decimal places.
std::string emit_records(std::span<const BenchRecord> records, RecordFormat format);

}  // namespace ktruss
