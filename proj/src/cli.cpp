#include "ktruss/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ktruss/csr_cache.hpp"
#include "ktruss/errors.hpp"
#include "ktruss/oracle.hpp"
#include "ktruss/truss.hpp"

namespace ktruss::cli {

namespace {

struct LoadedInput {
  EdgeList graph;  // identity labels when the input was a binary cache
  ZeroTerminatedCsr csr;
  std::string name;
};

TrussOptions make_options(Strategy strategy, int threads) {
  TrussOptions options;
  options.strategy = strategy;
  options.threads = threads;
  return options;
}

bool parse_random_spec(const std::string& input, std::uint32_t& n, double& p) {
  if (!input.starts_with("random:")) return false;
  const std::size_t second = input.find(':', 7);
  if (second == std::string::npos) throw InvalidParameterError("expected random:<n>:<p>");
  const std::string n_text = input.substr(7, second - 7);
  const std::string p_text = input.substr(second + 1);
  const auto [ptr, ec] = std::from_chars(n_text.data(), n_text.data() + n_text.size(), n);
  if (ec != std::errc{} || ptr != n_text.data() + n_text.size()) {
    throw InvalidParameterError("bad vertex count in random:<n>:<p>");
  }
  try {
    std::size_t used = 0;
    p = std::stod(p_text, &used);
    if (used != p_text.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw InvalidParameterError("bad probability in random:<n>:<p>");
  }
  return true;
}

bool looks_like_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  char magic[8];
  in.read(magic, 8);
  return in.gcount() == 8 && std::equal(magic, magic + 8, kCsrCacheMagic.begin());
}

EdgeList edge_list_from_csr(const ZeroTerminatedCsr& csr) {
  EdgeList graph;
  graph.num_vertices = csr.num_vertices;
  graph.edges = extract_edges(csr);
  if (graph.edges.empty()) throw InvalidInputError("cache holds no live edges");
  graph.original_ids.resize(csr.num_vertices + std::size_t{1});
  for (std::uint32_t v = 0; v <= csr.num_vertices; ++v) graph.original_ids[v] = v;
  return graph;
}

LoadedInput load_input(const CliConfig& config) {
  LoadedInput loaded;

  std::uint32_t n = 0;
  double p = 0.0;
  if (parse_random_spec(config.input, n, p)) {
    loaded.graph = oracle::random_graph(n, p, config.seed);
    loaded.csr = build_csr(loaded.graph);
    loaded.name = config.input;
    return loaded;
  }

  if (!std::filesystem::exists(config.input)) {
    throw InvalidInputError("no such input: " + config.input);
  }
  loaded.name = std::filesystem::path(config.input).filename().string();

  if (looks_like_cache(config.input)) {
    std::ifstream in(config.input, std::ios::binary);
    loaded.csr = read_csr_cache(in);
    loaded.graph = edge_list_from_csr(loaded.csr);
  } else {
    std::ifstream in(config.input);
    const auto raw = parse_edge_list(in);
    loaded.graph = canonicalize(raw);
    loaded.csr = build_csr(loaded.graph);
  }
  return loaded;
}

void write_text_output(const CliConfig& config, const std::string& text, std::ostream& out) {
  if (config.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.output);
  if (!file) throw InvalidInputError("cannot open output: " + config.output);
  file << text;
}

std::string truss_edge_lines(const TrussResult& result, const EdgeList& graph) {
  std::string text;
  for (const SupportedEdge& e : result.edges) {
    text += std::to_string(graph.original_ids[e.u]) + ' ' +
            std::to_string(graph.original_ids[e.v]) + ' ' + std::to_string(e.support) + '\n';
  }
  return text;
}

std::vector<SupportedEdge> oracle_truss_with_supports(const EdgeList& graph, std::uint32_t k) {
  const std::vector<Edge> survivors = oracle::ktruss_edges(graph, k);
  const auto supports = oracle::edge_supports(graph.num_vertices, survivors);
  std::vector<SupportedEdge> expected;
  expected.reserve(survivors.size());
  for (const Edge& e : survivors) expected.push_back({e.u, e.v, supports.at(e)});
  return expected;
}

std::string describe(const SupportedEdge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") support " +
         std::to_string(e.support);
}

// Reports the first divergence between two sorted supported-edge sets.
std::string first_divergence(const std::vector<SupportedEdge>& expected,
                             const std::vector<SupportedEdge>& actual) {
  for (std::size_t i = 0; i < std::min(expected.size(), actual.size()); ++i) {
    if (expected[i] != actual[i]) {
      return "expected " + describe(expected[i]) + ", got " + describe(actual[i]);
    }
  }
  if (expected.size() > actual.size()) return "missing edge " + describe(expected[actual.size()]);
  return "extra edge " + describe(actual[expected.size()]);
}

}  // namespace

int cmd_convert(const CliConfig& config, std::ostream& out, std::ostream& err) {
  (void)err;
  const LoadedInput loaded = load_input(config);
  std::ofstream sink(config.output, std::ios::binary);
  if (!sink) throw InvalidInputError("cannot open output: " + config.output);
  write_csr_cache(loaded.csr, sink);
  out << "vertices=" << loaded.csr.num_vertices
      << " edges=" << (loaded.csr.total_slots() - loaded.csr.num_vertices)
      << " slots=" << loaded.csr.total_slots() << "\n";
  return kExitOk;
}

int cmd_truss(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const LoadedInput loaded = load_input(config);
  const TrussOptions options = make_options(config.strategy, config.threads);

  TrussResult result;
  std::string k_label;
  if (config.kmax) {
    KmaxResult found = kmax_search(loaded.csr, options);
    result = std::move(found.truss);
    k_label = "kmax=" + std::to_string(found.k_max);
  } else {
    result = ktruss(loaded.csr, *config.k, options);
    k_label = "k=" + std::to_string(result.k);
  }

  write_text_output(config, truss_edge_lines(result, loaded.graph), out);
  err << k_label << " kept=" << result.edges.size() << " iterations=" << result.iterations
      << "\n";
  return kExitOk;
}

int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const LoadedInput loaded = load_input(config);
  const std::uint32_t max_k = config.max_k != 0 ? config.max_k : oracle::kmax(loaded.graph) + 1;

  bool all_pass = true;
  for (std::uint32_t k = 2; k <= max_k; ++k) {
    const std::vector<SupportedEdge> expected = oracle_truss_with_supports(loaded.graph, k);
    for (const Strategy strategy : {Strategy::Serial, Strategy::Coarse, Strategy::Fine}) {
      const TrussResult result =
          ktruss(loaded.csr, k, make_options(strategy, config.threads));
      if (result.edges == expected) {
        out << "PASS k=" << k << " strategy=" << to_string(strategy) << "\n";
      } else {
        all_pass = false;
        out << "FAIL k=" << k << " strategy=" << to_string(strategy) << "\n";
        err << "mismatch at k=" << k << " strategy=" << to_string(strategy) << ": "
            << first_divergence(expected, result.edges) << "\n";
      }
    }
  }
  return all_pass ? kExitOk : kExitVerifyFailed;
}

int cmd_bench(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const LoadedInput loaded = load_input(config);
  const std::vector<Strategy> strategies =
      config.strategies.empty() ? std::vector<Strategy>{config.strategy} : config.strategies;
  const std::vector<int> thread_counts =
      config.thread_counts.empty() ? std::vector<int>{config.threads} : config.thread_counts;

  // Kmax is meta-protocol: resolve once, untimed, and bench the literal k.
  const std::uint32_t k =
      config.kmax
          ? kmax_search(loaded.csr, make_options(strategies.front(), thread_counts.front())).k_max
          : *config.k;

  std::vector<BenchRecord> records;
  for (const Strategy strategy : strategies) {
    const auto sweep =
        thread_sweep(loaded.csr, k, strategy, thread_counts, config.trials, loaded.name);
    records.insert(records.end(), sweep.begin(), sweep.end());
  }

  // All strategies must describe the same truss before anything is emitted.
  if (strategies.size() > 1) {
    const TrussResult reference =
        ktruss(loaded.csr, k, make_options(strategies.front(), thread_counts.front()));
    for (std::size_t i = 1; i < strategies.size(); ++i) {
      const TrussResult other =
          ktruss(loaded.csr, k, make_options(strategies[i], thread_counts.front()));
      if (other.edges != reference.edges) {
        err << "strategy outputs diverge between " << to_string(strategies.front()) << " and "
            << to_string(strategies[i]) << "\n";
        return kExitVerifyFailed;
      }
    }
  }

  write_text_output(config, emit_records(records, config.format), out);
  return kExitOk;
}

namespace {

int default_thread_count() {
  if (const char* env = std::getenv("KTRUSS_THREADS")) {
    int value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && ptr == text.data() + text.size() && value >= 1) return value;
  }
  return hardware_threads();
}

const std::map<std::string, Strategy> kStrategyNames = {
    {"serial", Strategy::Serial}, {"coarse", Strategy::Coarse}, {"fine", Strategy::Fine}};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig config;
  std::vector<std::string> strategy_names;

  CLI::App app{"Parallel K-truss decomposition over zero-terminated upper-triangular CSR"};
  app.require_subcommand(1);

  const std::string input_help = "edge-list file, binary cache, or random:<n>:<p>";

  auto* convert = app.add_subcommand("convert", "Build a binary CSR cache from an edge list");
  convert->add_option("input", config.input, input_help)->required();
  convert->add_option("output", config.output, "cache file to write")->required();
  convert->add_option("--seed", config.seed, "seed for random:<n>:<p> inputs");

  auto* truss = app.add_subcommand("truss", "Compute the k-truss and print surviving edges");
  truss->add_option("input", config.input, input_help)->required();
  auto* truss_k = truss->add_option("--k", config.k, "truss parameter (>= 2)");
  auto* truss_kmax = truss->add_flag("--kmax", config.kmax, "find the largest non-empty k");
  truss_k->excludes(truss_kmax);
  truss->add_option("--strategy", config.strategy, "support strategy")
      ->transform(CLI::CheckedTransformer(kStrategyNames));
  truss->add_option("--threads", config.threads, "worker count (default: KTRUSS_THREADS or hardware)")
      ->check(CLI::PositiveNumber);
  truss->add_option("--output", config.output, "write edges here instead of stdout");
  truss->add_option("--seed", config.seed, "seed for random:<n>:<p> inputs");

  auto* verify = app.add_subcommand("verify", "Check every strategy against the brute-force oracle");
  verify->add_option("input", config.input, input_help)->required();
  verify->add_option("--max-k", config.max_k, "highest k to verify (default: oracle kmax + 1)");
  verify->add_option("--threads", config.threads, "worker count")->check(CLI::PositiveNumber);
  verify->add_option("--seed", config.seed, "seed for random:<n>:<p> inputs");

  auto* bench = app.add_subcommand("bench", "Time the truss loop and report ME/s");
  bench->add_option("input", config.input, input_help)->required();
  auto* bench_k = bench->add_option("--k", config.k, "truss parameter (>= 2)");
  auto* bench_kmax = bench->add_flag("--kmax", config.kmax, "resolve and bench k = kmax");
  bench_k->excludes(bench_kmax);
  bench->add_option("--strategy", strategy_names, "strategies to bench (comma-separated)")
      ->delimiter(',');
  bench->add_option("--threads", config.thread_counts, "thread counts to bench (comma-separated)")
      ->delimiter(',');
  bench->add_option("--trials", config.trials, "timed repetitions per configuration")
      ->check(CLI::PositiveNumber);
  bench->add_option("--format", config.format, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, RecordFormat>{{"csv", RecordFormat::Csv}, {"md", RecordFormat::Markdown}}));
  bench->add_option("--output", config.output, "write records here instead of stdout");
  bench->add_option("--seed", config.seed, "seed for random:<n>:<p> inputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (config.threads <= 0) config.threads = default_thread_count();
    for (const std::string& name : strategy_names) {
      const auto strategy = strategy_from_string(name);
      if (!strategy) throw InvalidParameterError("unknown strategy: " + name);
      config.strategies.push_back(*strategy);
    }
    for (int t : config.thread_counts) {
      if (t < 1) throw InvalidParameterError("thread counts must be >= 1");
    }

    if (convert->parsed()) return cmd_convert(config, out, err);
    if (truss->parsed() || bench->parsed()) {
      if (!config.k && !config.kmax) {
        throw InvalidParameterError("one of --k or --kmax is required");
      }
      if (config.k && *config.k < 2) throw InvalidParameterError("k must be >= 2");
      return truss->parsed() ? cmd_truss(config, out, err) : cmd_bench(config, out, err);
    }
    return cmd_verify(config, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace ktruss::cli
