#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ktruss/csr.hpp"
#include "ktruss/support.hpp"

namespace ktruss {

struct TrussResult {
  std::uint32_t k = 0;
  // Surviving edges with the supports of the final compute pass, which at
  // convergence are exact for the surviving subgraph.
  std::vector<SupportedEdge> edges;
  std::uint32_t iterations = 0;  // computeSupports + pruneEdges rounds
  // One removal count per round; the last entry is the converging 0 and no
  // earlier entry is 0.
  std::vector<std::uint64_t> removed_per_iteration;
};

// Called after each prune round with the pruned graph, the supports that
// drove the round, and the number of edges removed.
using RoundObserver =
    std::function<void(const ZeroTerminatedCsr&, const SupportArray&, std::uint64_t removed)>;

struct TrussOptions {
  Strategy strategy = Strategy::Fine;
  int threads = 1;
  SupportWidth width = SupportWidth::Bits32;
  RoundObserver observer;
};

// Per row, compacts entries with support >= k-2 to the row front (original
// ascending order preserved) and zero-fills the rest, restoring every CSR
// invariant. Returns the number of edges removed. Does not touch `supports`.
std::uint64_t prune_edges(ZeroTerminatedCsr& graph, const SupportArray& supports,
                          std::uint32_t k, int threads = 1);

// Repeats {zero supports, compute_supports, prune_edges} until a round
// removes nothing. Works on a private copy; the input graph is not mutated.
// k = 2 converges after one round with the whole graph. Requires k >= 2.
TrussResult ktruss(const ZeroTerminatedCsr& graph, std::uint32_t k,
                   const TrussOptions& options = {});

struct KmaxResult {
  std::uint32_t k_max = 0;
  TrussResult truss;
};

// Largest k >= 2 with a non-empty k-truss, plus that truss. Bounds k by
// max(support)+2 on the pristine graph, then binary-searches [3, bound];
// every probe runs ktruss from the pristine graph. Triangle-free graphs
// return k_max = 2 with the whole graph.
KmaxResult kmax_search(const ZeroTerminatedCsr& graph, const TrussOptions& options = {});

namespace detail {

// The fixpoint loop itself, mutating `graph` in place. Returns the per-round
// removal counts (last entry 0). This is the region the bench harness times.
std::vector<std::uint64_t> run_fixpoint(ZeroTerminatedCsr& graph, SupportArray& supports,
                                        std::uint32_t k, const TrussOptions& options);

}  // namespace detail

}  // namespace ktruss
