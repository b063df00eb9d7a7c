#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ktruss {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed line in an edge-list text input.
struct ParseError final : Error {
  ParseError(std::size_t line_number, const std::string& what)
      : Error("line " + std::to_string(line_number) + ": " + what), line(line_number) {}
  std::size_t line;
};

// Input stream held no data lines at all.
struct EmptyInputError final : Error {
  using Error::Error;
};

// Canonicalization left zero edges (self-loops only, or nothing).
struct EmptyGraphError final : Error {
  using Error::Error;
};

// A structural invariant of EdgeList or ZeroTerminatedCsr does not hold.
struct InvalidInputError final : Error {
  using Error::Error;
};

struct CorruptCacheError final : Error {
  using Error::Error;
};

struct InvalidParameterError final : Error {
  using Error::Error;
};

// A support counter exceeded the configured width.
struct SupportOverflowError final : Error {
  SupportOverflowError(std::size_t slot_index, const std::string& what)
      : Error(what), slot(slot_index) {}
  std::size_t slot;
};

}  // namespace ktruss
