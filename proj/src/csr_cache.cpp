#include "ktruss/csr_cache.hpp"

#include <bit>
#include <cstring>
#include <limits>

#include "ktruss/errors.hpp"

namespace ktruss {

namespace {

constexpr std::size_t kChunkElements = 1 << 16;

void put_u32(std::ostream& sink, std::uint32_t value) {
  char bytes[4];
  for (int i = 0; i < 4; ++i) bytes[i] = static_cast<char>((value >> (8 * i)) & 0xFF);
  sink.write(bytes, 4);
}

void put_u64(std::ostream& sink, std::uint64_t value) {
  char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((value >> (8 * i)) & 0xFF);
  sink.write(bytes, 8);
}

void write_u32_array(std::ostream& sink, const std::vector<std::uint32_t>& values) {
  if constexpr (std::endian::native == std::endian::little) {
    sink.write(reinterpret_cast<const char*>(values.data()),
               static_cast<std::streamsize>(values.size() * 4));
  } else {
    for (std::uint32_t v : values) put_u32(sink, v);
  }
}

std::uint64_t get_uint(std::istream& source, int width) {
  char bytes[8];
  source.read(bytes, width);
  if (source.gcount() != width) throw CorruptCacheError("truncated cache header");
  std::uint64_t value = 0;
  for (int i = 0; i < width; ++i) {
    value |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[i])) << (8 * i);
  }
  return value;
}

// Chunked so a corrupt count fails on the short read instead of a giant
// allocation.
std::vector<std::uint32_t> read_u32_array(std::istream& source, std::uint64_t count) {
  std::vector<std::uint32_t> values;
  std::uint64_t done = 0;
  std::vector<std::uint32_t> chunk;
  while (done < count) {
    const std::size_t want = static_cast<std::size_t>(std::min<std::uint64_t>(kChunkElements, count - done));
    chunk.resize(want);
    source.read(reinterpret_cast<char*>(chunk.data()), static_cast<std::streamsize>(want * 4));
    if (static_cast<std::size_t>(source.gcount()) != want * 4) {
      throw CorruptCacheError("truncated cache payload");
    }
    if constexpr (std::endian::native != std::endian::little) {
      for (std::uint32_t& v : chunk) v = __builtin_bswap32(v);
    }
    values.insert(values.end(), chunk.begin(), chunk.end());
    done += want;
  }
  return values;
}

}  // namespace

void write_csr_cache(const ZeroTerminatedCsr& graph, std::ostream& sink) {
  sink.write(kCsrCacheMagic.data(), kCsrCacheMagic.size());
  put_u32(sink, graph.num_vertices);
  put_u64(sink, graph.total_slots());
  write_u32_array(sink, graph.row_ptr);
  write_u32_array(sink, graph.col_idx);
  if (!sink) throw Error("cache write failed");
}

ZeroTerminatedCsr read_csr_cache(std::istream& source) {
  char magic[8];
  source.read(magic, 8);
  if (source.gcount() != 8 || std::memcmp(magic, kCsrCacheMagic.data(), 8) != 0) {
    throw CorruptCacheError("bad cache magic");
  }

  ZeroTerminatedCsr graph;
  graph.num_vertices = static_cast<std::uint32_t>(get_uint(source, 4));
  const std::uint64_t total_slots = get_uint(source, 8);
  if (graph.num_vertices == 0 || total_slots < graph.num_vertices ||
      total_slots > std::numeric_limits<std::uint32_t>::max()) {
    throw CorruptCacheError("implausible cache dimensions");
  }

  graph.row_ptr = read_u32_array(source, graph.num_vertices + std::uint64_t{2});
  if (graph.row_ptr[graph.num_vertices + 1] != total_slots) {
    throw CorruptCacheError("row_ptr end does not match slot count");
  }
  graph.col_idx = read_u32_array(source, total_slots);

  if (source.peek() != std::istream::traits_type::eof()) {
    throw CorruptCacheError("trailing bytes after cache payload");
  }

  try {
    validate_csr(graph);
  } catch (const InvalidInputError& e) {
    throw CorruptCacheError(std::string("cache violates csr invariants: ") + e.what());
  }
  return graph;
}

}  // namespace ktruss
