#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ktruss/bench.hpp"
#include "ktruss/support.hpp"

namespace ktruss::cli {

// Exit codes: 0 success, 1 verification mismatch, 2 input/usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;

struct CliConfig {
  std::string input;
  std::string output;  // empty = standard output
  std::optional<std::uint32_t> k;
  bool kmax = false;
  Strategy strategy = Strategy::Fine;
  std::vector<Strategy> strategies;  // bench cross-product
  int threads = 0;                   // resolved: flag > KTRUSS_THREADS > hardware
  std::vector<int> thread_counts;    // bench cross-product
  int trials = 10;
  RecordFormat format = RecordFormat::Csv;
  std::uint64_t seed = 1;
  std::uint32_t max_k = 0;  // verify upper bound; 0 = oracle kmax + 1
};

int cmd_convert(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_truss(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const CliConfig& config, std::ostream& out, std::ostream& err);

// Parses argv and dispatches. Never throws on malformed input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ktruss::cli
