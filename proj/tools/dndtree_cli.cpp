// dndtree: build, benchmark and fuzz the dynamic connectivity indexes.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <dndtree/dndtree.hpp>

namespace {

using namespace dndtree;

constexpr int kUsage = 2;
constexpr int kIo = 1;
constexpr int kInvariant = 3;

struct CliConfig {
  std::string input;
  std::string output;
  std::uint64_t seed = 0;
  std::size_t k = 0;
  std::vector<double> pct{5, 10, 20, 40, 80};
  std::size_t queries = 100'000;
  Mode mode = Mode::conn;
  std::size_t gen_n = 0;
  std::size_t gen_m = 0;
  std::size_t n = 64;
  std::size_t ops = 50'000;
};

struct Failure {
  int code;
  std::string message;
};

EdgeStream load(const CliConfig& cfg) {
  if (cfg.input.empty()) {
    if (cfg.gen_n == 0) throw Failure{kUsage, "need --input or --gen-n/--gen-m"};
    try {
      return random_graph_stream(cfg.gen_n, cfg.gen_m, cfg.seed);
    } catch (const error& e) {
      throw Failure{kUsage, e.what()};
    }
  }
  std::ifstream in(cfg.input);
  if (!in) throw Failure{kIo, "cannot open " + cfg.input};
  try {
    return parse_edge_stream(in);
  } catch (const error& e) {
    throw Failure{kIo, cfg.input + ": " + e.what()};
  }
}

void emit(const CliConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  out << text;
  if (!out) throw Failure{kIo, "cannot write " + cfg.output};
}

std::string metric_block(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::ostringstream os;
  os << "metric,value\n";
  for (const auto& [k, v] : rows) os << k << ',' << v << '\n';
  return os.str();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

std::vector<std::pair<std::string, std::string>> index_rows(const EdgeStream& stream, Mode mode, bool timed) {
  std::vector<std::pair<std::string, std::string>> rows;
  MetricsReport build;
  rows.emplace_back("mode", std::string(to_string(mode)));
  rows.emplace_back("n", std::to_string(stream.n));
  rows.emplace_back("rows", std::to_string(stream.events.size()));
  if (mode == Mode::conn) {
    DndIndex idx(stream.n);
    build_index(idx, stream, &build);
    const ComponentStats s = idx.component_stats();
    rows.emplace_back("m", std::to_string(s.edges));
    rows.emplace_back("components", std::to_string(s.components));
    rows.emplace_back("largest_component", std::to_string(s.largest_component));
    rows.emplace_back("avg_depth_id", fmt(s.average_depth));
  } else {
    Dnd2Index idx(stream.n);
    build_index(idx, stream, &build);
    const Ecc2Stats s = idx.ecc2_stats();
    rows.emplace_back("m", std::to_string(s.edges));
    rows.emplace_back("components", std::to_string(s.components));
    rows.emplace_back("two_edge_components", std::to_string(s.two_edge_components));
    rows.emplace_back("bridges", std::to_string(s.bridges));
    rows.emplace_back("avg_depth_id", fmt(s.average_depth));
  }
  rows.emplace_back("duplicate_inserts", std::to_string(build.duplicate_inserts));
  rows.emplace_back("self_loops", std::to_string(build.self_loops));
  if (timed && build.build_time.count)
    rows.emplace_back("insert_mean_ns", fmt(*build.build_time.mean_ns()));
  return rows;
}

int run_build(const CliConfig& cfg, bool timed) {
  const EdgeStream stream = load(cfg);
  auto rows = index_rows(stream, cfg.mode, timed);
  if (!timed) {
    rows.emplace_back("timestamped", stream.timestamped() && !stream.events.empty() ? "1" : "0");
    if (stream.timestamped() && !stream.events.empty()) {
      auto [lo, hi] = std::minmax_element(stream.events.begin(), stream.events.end(),
                                          [](const auto& a, const auto& b) { return *a.t < *b.t; });
      rows.emplace_back("t_min", std::to_string(*lo->t));
      rows.emplace_back("t_max", std::to_string(*hi->t));
    }
  }
  emit(cfg, metric_block(rows));
  return 0;
}

int run_bench(const CliConfig& cfg) {
  const EdgeStream stream = load(cfg);
  CycleConfig cc;
  cc.k = cfg.k;
  cc.seed = cfg.seed;
  cc.queries = cfg.queries;
  MetricsReport r;
  try {
    r = run_random_cycle(stream, cfg.mode, cc);
  } catch (const error& e) {
    throw Failure{kUsage, e.what()};
  }
  std::ostringstream os;
  write_csv(os, {{"all", r}});
  emit(cfg, os.str());
  if (r.partition_restored && !*r.partition_restored) {
    std::cerr << "partition not restored after the delete/re-insert cycle\n";
    return kInvariant;
  }
  return 0;
}

int run_window(const CliConfig& cfg) {
  const EdgeStream stream = load(cfg);
  if (!stream.timestamped()) throw Failure{kUsage, "window needs a timestamp on every row"};
  std::vector<std::pair<std::string, MetricsReport>> reports;
  for (double pct : cfg.pct) {
    if (!(pct > 0 && pct <= 100)) throw Failure{kUsage, "--pct values must lie in (0, 100]"};
    WindowConfig wc;
    wc.fraction = pct / 100.0;
    wc.seed = cfg.seed;
    wc.queries = cfg.queries;
    reports.emplace_back("w" + fmt(pct), run_sliding_window(stream, cfg.mode, wc));
  }
  std::ostringstream os;
  write_csv(os, reports);
  emit(cfg, os.str());
  return 0;
}

int run_fuzz(const CliConfig& cfg) {
  FuzzConfig fc;
  fc.n = cfg.n;
  fc.ops = cfg.ops;
  fc.seed = cfg.seed;
  if (fc.n < 2) throw Failure{kUsage, "--n must be at least 2"};
  const FuzzReport r = cfg.mode == Mode::conn ? fuzz_connectivity(fc) : fuzz_two_edge(fc);
  emit(cfg, metric_block({
                {"mode", std::string(to_string(cfg.mode))},
                {"ops", std::to_string(r.ops)},
                {"queries", std::to_string(r.queries)},
                {"query_mismatches", std::to_string(r.query_mismatches)},
                {"partition_checks", std::to_string(r.partition_checks)},
                {"partition_mismatches", std::to_string(r.partition_mismatches)},
                {"root_violations", std::to_string(r.root_violations)},
                {"rep_checks", std::to_string(r.rep_checks)},
                {"rep_mismatches", std::to_string(r.rep_mismatches)},
                {"avg_finds_len", fmt(r.mean_find_length())},
                {"seconds", fmt(r.seconds)},
            }));
  if (!r.ok()) {
    std::cerr << "fuzz failed: " << r.failure.value_or("mismatch counters are nonzero") << '\n';
    return kInvariant;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic connectivity and 2-edge connectivity index tools"};
  app.require_subcommand(1);
  CliConfig cfg;

  std::string mode = "conn";
  auto common = [&](CLI::App* sub, bool input) {
    if (input) {
      sub->add_option("--input", cfg.input, "edge list: u v [t] per line");
    }
    sub->add_option("--output", cfg.output, "write the CSV here instead of stdout");
    sub->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
    sub->add_option("--mode", mode, "conn or 2ec")->check(CLI::IsMember({"conn", "2ec"}))->capture_default_str();
  };
  auto generator = [&](CLI::App* sub) {
    sub->add_option("--gen-n", cfg.gen_n, "random graph: vertex count (when no --input)");
    sub->add_option("--gen-m", cfg.gen_m, "random graph: edge count");
  };

  CLI::App* build = app.add_subcommand("build", "build an index and report its shape and insert time");
  common(build, true);
  generator(build);
  CLI::App* stats = app.add_subcommand("stats", "report dataset and index statistics");
  common(stats, true);
  generator(stats);

  CLI::App* bench = app.add_subcommand("bench", "delete k random edges, re-insert them, run queries");
  common(bench, true);
  generator(bench);
  bench->add_option("--k", cfg.k, "number of edges to delete and re-insert")->required();
  bench->add_option("--queries", cfg.queries, "query batch size")->capture_default_str();

  CLI::App* window = app.add_subcommand("window", "sliding-window replay of a timestamped stream");
  common(window, true);
  window->add_option("--pct", cfg.pct, "window sizes in percent of the time span")->delimiter(',');
  window->add_option("--queries", cfg.queries, "query batch size on the final window")->capture_default_str();

  CLI::App* fuzz = app.add_subcommand("fuzz", "differential test against the oracle");
  common(fuzz, false);
  fuzz->add_option("--n", cfg.n, "vertex count")->capture_default_str();
  fuzz->add_option("--ops", cfg.ops, "operation count")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }
  cfg.mode = mode == "2ec" ? Mode::two_edge : Mode::conn;

  try {
    if (*build) return run_build(cfg, true);
    if (*stats) return run_build(cfg, false);
    if (*bench) return run_bench(cfg);
    if (*window) return run_window(cfg);
    if (*fuzz) return run_fuzz(cfg);
  } catch (const Failure& f) {
    std::cerr << "dndtree: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "dndtree: " << e.what() << '\n';
    return kInvariant;
  }
  return kUsage;
}
