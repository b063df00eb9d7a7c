#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ktruss/csr.hpp"

namespace ktruss {

enum class Strategy {
  Serial,  // one worker iterates rows
  Coarse,  // parallel over rows; one task per vertex neighborhood
  Fine,    // parallel over slots; one task per nonzero entry
};

const char* to_string(Strategy strategy) noexcept;
std::optional<Strategy> strategy_from_string(std::string_view name) noexcept;

// Counter width policy. Storage is always 32-bit (an edge's support is
// bounded by num_vertices - 2, so 32-bit counters cannot wrap); Bits16 adds a
// checked scan that rejects any count above 65535.
enum class SupportWidth { Bits32, Bits16 };

// One triangle counter per CSR slot; sentinel and pruned slots stay 0.
// During a support phase all writes go through atomic fetch-add.
struct SupportArray {
  std::vector<std::uint32_t> counts;

  SupportArray() = default;
  explicit SupportArray(std::size_t slot_count) : counts(slot_count, 0) {}

  std::size_t size() const noexcept { return counts.size(); }
};

int hardware_threads() noexcept;

// Merge-intersects the pivot row's tail (slots pivot_slot+1.. until the first
// zero) with the predecessor's row (row_ptr[predecessor].. until the first
// zero). Each common vertex closes a triangle: the two matching slots get an
// atomic increment and a local counter is bumped. Returns the local counter;
// the caller adds it (atomically) to the pivot slot's support.
std::uint32_t intersect_tails(const ZeroTerminatedCsr& graph, std::uint32_t pivot_slot,
                              std::uint32_t predecessor, SupportArray& supports) noexcept;

// Fills `supports` with exact per-edge triangle counts for the current
// (possibly pruned) graph and returns the total triangle count. `supports`
// must be zeroed and sized to the graph. All three strategies produce
// identical contents for identical input, for any thread count.
// Throws SupportOverflowError in Bits16 mode if any counter exceeds 65535.
std::uint64_t compute_supports(const ZeroTerminatedCsr& graph, SupportArray& supports,
                               Strategy strategy, int threads = 1,
                               SupportWidth width = SupportWidth::Bits32);

void reset_supports(SupportArray& supports) noexcept;

}  // namespace ktruss
