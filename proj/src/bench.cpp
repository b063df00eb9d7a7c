#include "ktruss/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "ktruss/errors.hpp"
#include "ktruss/truss.hpp"

namespace ktruss {

double millions_of_edges_per_second(std::uint64_t num_edges, double mean_ms) noexcept {
  return static_cast<double>(num_edges) / (mean_ms * 1000.0);
}

BenchRecord run_bench(const ZeroTerminatedCsr& graph, std::optional<std::uint32_t> k_spec,
                      Strategy strategy, int threads, int trials,
                      const std::string& graph_name) {
  if (trials < 1) throw InvalidParameterError("trials must be >= 1");
  if (threads < 1) throw InvalidParameterError("thread count must be >= 1");

  TrussOptions options;
  options.strategy = strategy;
  options.threads = threads;
  const std::uint32_t k = k_spec ? *k_spec : kmax_search(graph, options).k_max;

  // One untimed warm-up to absorb first-touch effects.
  (void)ktruss(graph, k, options);

  // Every trial starts from a pristine copy; the timer brackets the fixpoint
  // loop only -- no parsing, no copies, no result extraction.
  double total_ms = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    ZeroTerminatedCsr work = graph;
    SupportArray supports(work.total_slots());
    const auto start = std::chrono::steady_clock::now();
    detail::run_fixpoint(work, supports, k, options);
    const auto stop = std::chrono::steady_clock::now();
    total_ms += std::chrono::duration<double, std::milli>(stop - start).count();
  }

  BenchRecord record;
  record.graph_name = graph_name;
  record.num_vertices = graph.num_vertices;
  record.num_edges = graph.total_slots() - graph.num_vertices;
  record.k = k;
  record.strategy = strategy;
  record.threads = threads;
  record.trials = trials;
  record.mean_ms = total_ms / trials;
  record.me_per_s = millions_of_edges_per_second(record.num_edges, record.mean_ms);
  return record;
}

std::vector<BenchRecord> thread_sweep(const ZeroTerminatedCsr& graph,
                                      std::optional<std::uint32_t> k_spec, Strategy strategy,
                                      std::span<const int> thread_counts, int trials,
                                      const std::string& graph_name) {
  std::vector<int> ordered(thread_counts.begin(), thread_counts.end());
  std::sort(ordered.begin(), ordered.end());
  std::vector<BenchRecord> records;
  records.reserve(ordered.size());
  for (int threads : ordered) {
    records.push_back(run_bench(graph, k_spec, strategy, threads, trials, graph_name));
  }
  return records;
}

namespace {

std::string format_fixed3(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.3f", value);
  return buffer;
}

}  // namespace

std::string emit_records(std::span<const BenchRecord> records, RecordFormat format) {
  std::string out;
  if (format == RecordFormat::Csv) {
    out += "graph,vertices,edges,k,strategy,threads,trials,mean_ms,me_per_s\n";
    for (const BenchRecord& r : records) {
      out += r.graph_name + ',' + std::to_string(r.num_vertices) + ',' +
             std::to_string(r.num_edges) + ',' + std::to_string(r.k) + ',' +
             to_string(r.strategy) + ',' + std::to_string(r.threads) + ',' +
             std::to_string(r.trials) + ',' + format_fixed3(r.mean_ms) + ',' +
             format_fixed3(r.me_per_s) + '\n';
    }
  } else {
    out += "| graph | vertices | edges | k | strategy | threads | trials | mean_ms | me_per_s |\n";
    out += "|---|---|---|---|---|---|---|---|---|\n";
    for (const BenchRecord& r : records) {
      out += "| " + r.graph_name + " | " + std::to_string(r.num_vertices) + " | " +
             std::to_string(r.num_edges) + " | " + std::to_string(r.k) + " | " +
             to_string(r.strategy) + " | " + std::to_string(r.threads) + " | " +
             std::to_string(r.trials) + " | " + format_fixed3(r.mean_ms) + " | " +
             format_fixed3(r.me_per_s) + " |\n";
    }
  }
  return out;
}

}  // namespace ktruss
