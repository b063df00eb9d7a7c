#include "ktruss/truss.hpp"

#include <algorithm>

#include "ktruss/errors.hpp"

namespace ktruss {

std::uint64_t prune_edges(ZeroTerminatedCsr& graph, const SupportArray& supports,
                          std::uint32_t k, int threads) {
  if (k < 2) throw InvalidParameterError("k must be >= 2");
  if (threads < 1) throw InvalidParameterError("thread count must be >= 1");
  if (supports.size() != graph.total_slots()) {
    throw InvalidParameterError("support array does not match slot count");
  }

  const std::uint32_t threshold = k - 2;
  const std::uint32_t n = graph.num_vertices;
  std::uint32_t* col = graph.col_idx.data();
  const std::uint32_t* count = supports.counts.data();
  std::uint64_t removed = 0;

  // Rows are disjoint slot ranges, so no synchronization on col_idx. Stable
  // in-place compaction keeps survivors ascending and zero-fills the tail,
  // which the sentinel-terminated merge scans rely on.
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads) reduction(+ : removed)
  for (std::uint32_t v = 1; v <= n; ++v) {
    std::uint32_t read = graph.row_ptr[v];
    std::uint32_t write = read;
    for (; col[read] != 0; ++read) {
      if (count[read] >= threshold) col[write++] = col[read];
    }
    removed += read - write;
    for (; write < read; ++write) col[write] = 0;
  }
  return removed;
}

namespace detail {

std::vector<std::uint64_t> run_fixpoint(ZeroTerminatedCsr& graph, SupportArray& supports,
                                        std::uint32_t k, const TrussOptions& options) {
  std::vector<std::uint64_t> removed_history;
  for (;;) {
    reset_supports(supports);
    compute_supports(graph, supports, options.strategy, options.threads, options.width);
    const std::uint64_t removed = prune_edges(graph, supports, k, options.threads);
    removed_history.push_back(removed);
    if (options.observer) options.observer(graph, supports, removed);
    if (removed == 0) break;
  }
  return removed_history;
}

}  // namespace detail

TrussResult ktruss(const ZeroTerminatedCsr& graph, std::uint32_t k, const TrussOptions& options) {
  if (k < 2) throw InvalidParameterError("k must be >= 2");

  ZeroTerminatedCsr work = graph;
  SupportArray supports(work.total_slots());

  TrussResult result;
  result.k = k;
  result.removed_per_iteration = detail::run_fixpoint(work, supports, k, options);
  result.iterations = static_cast<std::uint32_t>(result.removed_per_iteration.size());
  // The converging round compacted nothing, so slots still line up with the
  // supports of the final compute pass.
  result.edges = extract_edges(work, supports.counts);
  return result;
}

KmaxResult kmax_search(const ZeroTerminatedCsr& graph, const TrussOptions& options) {
  if (count_live_edges(graph) == 0) throw InvalidParameterError("kmax_search needs a non-empty graph");

  // One support pass over the pristine graph caps k_max at max(support) + 2.
  SupportArray supports(graph.total_slots());
  compute_supports(graph, supports, options.strategy, options.threads, options.width);
  const std::uint32_t max_support =
      *std::max_element(supports.counts.begin(), supports.counts.end());

  if (max_support == 0) {
    // Triangle-free: the 2-truss is the whole graph and the 3-truss is empty.
    return KmaxResult{2, ktruss(graph, 2, options)};
  }

  // Any graph with a triangle has a non-empty 3-truss, so lo starts feasible;
  // truss monotonicity (edges shrink as k grows) justifies the binary search.
  std::uint32_t lo = 3;
  std::uint32_t hi = max_support + 2;
  TrussResult best = ktruss(graph, 3, options);
  while (lo < hi) {
    const std::uint32_t mid = lo + (hi - lo + 1) / 2;
    TrussResult probe = ktruss(graph, mid, options);
    if (probe.edges.empty()) {
      hi = mid - 1;
    } else {
      best = std::move(probe);
      lo = mid;
    }
  }
  return KmaxResult{lo, std::move(best)};
}

}  // namespace ktruss
