#include "ktruss/support.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <string>
#include <thread>

#include "ktruss/errors.hpp"

namespace ktruss {

const char* to_string(Strategy strategy) noexcept {
  switch (strategy) {
    case Strategy::Serial: return "serial";
    case Strategy::Coarse: return "coarse";
    case Strategy::Fine: return "fine";
  }
  return "?";
}

std::optional<Strategy> strategy_from_string(std::string_view name) noexcept {
  if (name == "serial") return Strategy::Serial;
  if (name == "coarse") return Strategy::Coarse;
  if (name == "fine") return Strategy::Fine;
  return std::nullopt;
}

int hardware_threads() noexcept {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

namespace {

inline void atomic_add(std::uint32_t& counter, std::uint32_t delta) noexcept {
  std::atomic_ref<std::uint32_t>(counter).fetch_add(delta, std::memory_order_relaxed);
}

// All slot work for one pivot row; returns the row's triangle count.
inline std::uint64_t process_row(const ZeroTerminatedCsr& graph, std::uint32_t vertex,
                                 SupportArray& supports) noexcept {
  const std::uint32_t* col = graph.col_idx.data();
  std::uint64_t row_triangles = 0;
  for (std::uint32_t slot = graph.row_ptr[vertex]; col[slot] != 0; ++slot) {
    const std::uint32_t found = intersect_tails(graph, slot, col[slot], supports);
    if (found != 0) atomic_add(supports.counts[slot], found);
    row_triangles += found;
  }
  return row_triangles;
}

void check_16bit(const SupportArray& supports) {
  for (std::size_t slot = 0; slot < supports.counts.size(); ++slot) {
    if (supports.counts[slot] > 0xFFFF) {
      throw SupportOverflowError(slot, "16-bit support overflow at slot " + std::to_string(slot) +
                                           " (count " + std::to_string(supports.counts[slot]) + ")");
    }
  }
}

}  // namespace

std::uint32_t intersect_tails(const ZeroTerminatedCsr& graph, std::uint32_t pivot_slot,
                              std::uint32_t predecessor, SupportArray& supports) noexcept {
  const std::uint32_t* col = graph.col_idx.data();
  assert(pivot_slot < graph.total_slots());
  assert(col[pivot_slot] == predecessor && predecessor != 0);
  assert(predecessor <= graph.num_vertices);

  // Two-pointer merge over the pivot row's tail and the predecessor's row;
  // both scans stop at the first zero slot, which every row is guaranteed to
  // have before its end.
  std::uint32_t a = pivot_slot + 1;
  std::uint32_t b = graph.row_ptr[predecessor];
  std::uint32_t found = 0;
  while (col[a] != 0 && col[b] != 0) {
    if (col[a] == col[b]) {
      atomic_add(supports.counts[a], 1);
      atomic_add(supports.counts[b], 1);
      ++found;
      ++a;
      ++b;
    } else if (col[b] > col[a]) {
      ++a;
    } else {
      ++b;
    }
  }
  return found;
}

std::uint64_t compute_supports(const ZeroTerminatedCsr& graph, SupportArray& supports,
                               Strategy strategy, int threads, SupportWidth width) {
  if (threads < 1) throw InvalidParameterError("thread count must be >= 1");
  if (supports.size() != graph.total_slots()) {
    throw InvalidParameterError("support array does not match slot count");
  }

  const std::uint32_t n = graph.num_vertices;
  const std::uint32_t slot_count = static_cast<std::uint32_t>(graph.total_slots());
  const std::uint32_t* col = graph.col_idx.data();
  std::uint64_t triangles = 0;

  switch (strategy) {
    case Strategy::Serial: {
      for (std::uint32_t v = 1; v <= n; ++v) triangles += process_row(graph, v, supports);
      break;
    }
    case Strategy::Coarse: {
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads) reduction(+ : triangles)
      for (std::uint32_t v = 1; v <= n; ++v) triangles += process_row(graph, v, supports);
      break;
    }
    case Strategy::Fine: {
      // One task per slot; sentinel and pruned slots fall through the guard.
#pragma omp parallel for schedule(dynamic, 256) num_threads(threads) reduction(+ : triangles)
      for (std::uint32_t slot = 0; slot < slot_count; ++slot) {
        const std::uint32_t predecessor = col[slot];
        if (predecessor != 0) {
          const std::uint32_t found = intersect_tails(graph, slot, predecessor, supports);
          if (found != 0) atomic_add(supports.counts[slot], found);
          triangles += found;
        }
      }
      break;
    }
  }

  if (width == SupportWidth::Bits16) check_16bit(supports);
  return triangles;
}

void reset_supports(SupportArray& supports) noexcept {
  std::fill(supports.counts.begin(), supports.counts.end(), 0u);
}

}  // namespace ktruss
