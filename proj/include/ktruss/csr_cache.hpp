#pragma once

#include <array>
#include <istream>
#include <ostream>

#include "ktruss/csr.hpp"

namespace ktruss {

// Binary CSR cache, little-endian:
//   magic "ZTCSR1\0\0" | u32 num_vertices | u64 total_slots
//   | row_ptr as (n+2) x u32 | col_idx as total_slots x u32
inline constexpr std::array<char, 8> kCsrCacheMagic = {'Z', 'T', 'C', 'S', 'R', '1', '\0', '\0'};

void write_csr_cache(const ZeroTerminatedCsr& graph, std::ostream& sink);

// Validates all structural invariants before returning.
// Throws CorruptCacheError on bad magic, truncated or trailing bytes, or any
// invariant violation.
ZeroTerminatedCsr read_csr_cache(std::istream& source);

}  // namespace ktruss
