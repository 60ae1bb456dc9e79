#pragma once

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <deque>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dnd_index.hpp"
#include "error.hpp"
#include "oracle.hpp"
#include "random.hpp"
#include "two_ecc.hpp"
#include "types.hpp"

namespace dndtree {

enum class EventKind { insert, erase, query_conn, query_2ec };

struct WorkloadEvent {
  EventKind kind = EventKind::insert;
  VertexId u = 0;
  VertexId v = 0;
  std::optional<std::int64_t> t;
};

struct EdgeStream {
  std::vector<WorkloadEvent> events;
  std::size_t n = 0;
  std::vector<std::uint64_t> original_ids;  // dense id -> id used in the source

  bool timestamped() const {
    for (const auto& e : events)
      if (!e.t) return false;
    return true;
  }
};

/// Reads "u v [t]" rows (whitespace or comma separated). Lines starting with
/// '#' or '%' are comments. Vertex ids are remapped densely in order of first
/// appearance.
inline EdgeStream parse_edge_stream(std::istream& in) {
  EdgeStream out;
  std::unordered_map<std::uint64_t, VertexId> dense;
  auto map_id = [&](std::uint64_t raw) {
    auto [it, fresh] = dense.try_emplace(raw, static_cast<VertexId>(out.original_ids.size()));
    if (fresh) out.original_ids.push_back(raw);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    for (char& c : line)
      if (c == ',' || c == '\t' || c == '\r') c = ' ';
    std::vector<std::string_view> tokens;
    std::string_view rest(line);
    while (!rest.empty()) {
      const auto start = rest.find_first_not_of(' ');
      if (start == std::string_view::npos) break;
      rest.remove_prefix(start);
      const auto stop = std::min(rest.find(' '), rest.size());
      tokens.push_back(rest.substr(0, stop));
      rest.remove_prefix(stop);
    }
    if (tokens.empty() || tokens[0][0] == '#' || tokens[0][0] == '%') continue;
    auto fail = [&](const std::string& why) {
      throw error(errc::parse_error, "line " + std::to_string(line_no) + ": " + why);
    };
    if (tokens.size() < 2 || tokens.size() > 3) fail("expected 'u v [t]', got " + std::to_string(tokens.size()) + " fields");
    auto parse = [&](std::string_view tok, auto& value) {
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) fail("bad number '" + std::string(tok) + "'");
    };
    std::uint64_t a = 0, b = 0;
    parse(tokens[0], a);
    parse(tokens[1], b);
    WorkloadEvent ev;
    ev.u = map_id(a);
    ev.v = map_id(b);
    if (tokens.size() == 3) {
      std::int64_t t = 0;
      parse(tokens[2], t);
      ev.t = t;
    }
    out.events.push_back(ev);
  }
  out.n = out.original_ids.size();
  return out;
}

/// m distinct uniformly random edges on n vertices, as an untimestamped stream.
inline EdgeStream random_graph_stream(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 2 ? m > 0 : m > n * (n - 1) / 2)
    throw error(errc::k_too_large, "cannot place " + std::to_string(m) + " edges on " + std::to_string(n) + " vertices");
  EdgeStream out;
  out.n = n;
  out.original_ids.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.original_ids[i] = i;
  Rng rng(seed);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m * 2);
  while (out.events.size() < m) {
    const auto u = static_cast<VertexId>(uniform_below(rng, n));
    const auto v = static_cast<VertexId>(uniform_below(rng, n));
    if (u == v || !seen.insert(Edge(u, v).key()).second) continue;
    out.events.push_back({EventKind::insert, u, v, std::nullopt});
  }
  return out;
}

enum class Mode { conn, two_edge };

constexpr std::string_view to_string(Mode m) { return m == Mode::conn ? "conn" : "2ec"; }

struct OpTiming {
  std::uint64_t count = 0;
  double total_ns = 0.0;

  void add(double ns) {
    ++count;
    total_ns += ns;
  }
  std::optional<double> mean_ns() const {
    if (count == 0) return std::nullopt;
    return total_ns / static_cast<double>(count);
  }
};

struct MetricsReport {
  Mode mode = Mode::conn;
  std::size_t n = 0;
  std::size_t m = 0;

  std::uint64_t inserts = 0;
  std::uint64_t deletes = 0;
  std::uint64_t duplicate_inserts = 0;
  std::uint64_t self_loops = 0;
  std::uint64_t nontree_deletes = 0;
  std::uint64_t tree_replaced = 0;
  std::uint64_t tree_splits = 0;
  std::uint64_t queries = 0;
  std::uint64_t positive_queries = 0;

  std::optional<double> avg_depth_id;
  std::optional<double> avg_S;
  std::optional<double> avg_S_replaced;
  std::optional<double> avg_search;
  std::optional<double> avg_finds_len;
  std::optional<bool> partition_restored;

  OpTiming build_time;
  OpTiming insert_time;
  OpTiming delete_time;
  OpTiming slide_time;
  OpTiming query_time;

  /// Non-timing metrics in output order.
  std::vector<std::pair<std::string, std::string>> rows() const {
    auto num = [](double x) {
      std::ostringstream os;
      os.precision(6);
      os << x;
      return os.str();
    };
    auto opt = [&](const std::optional<double>& x) { return x ? num(*x) : std::string("NA"); };
    return {
        {"mode", std::string(to_string(mode))},
        {"n", std::to_string(n)},
        {"m", std::to_string(m)},
        {"inserts", std::to_string(inserts)},
        {"deletes", std::to_string(deletes)},
        {"duplicate_inserts", std::to_string(duplicate_inserts)},
        {"self_loops", std::to_string(self_loops)},
        {"nontree_deletes", std::to_string(nontree_deletes)},
        {"tree_replaced", std::to_string(tree_replaced)},
        {"tree_splits", std::to_string(tree_splits)},
        {"queries", std::to_string(queries)},
        {"positive_queries", std::to_string(positive_queries)},
        {"avg_depth_id", opt(avg_depth_id)},
        {"avg_S", opt(avg_S)},
        {"avg_S_replaced", opt(avg_S_replaced)},
        {"avg_search", opt(avg_search)},
        {"avg_finds_len", opt(avg_finds_len)},
        {"partition_restored", partition_restored ? (*partition_restored ? "1" : "0") : "NA"},
    };
  }

  std::vector<std::pair<std::string, const OpTiming*>> timings() const {
    return {{"build", &build_time},
            {"insert", &insert_time},
            {"delete", &delete_time},
            {"slide", &slide_time},
            {"query", &query_time}};
  }
};

/// Writes the report group as CSV: a "metric,value" block, one blank line,
/// then a "window_pct,op,mean_ns,count" block. With several reports the
/// metric names are prefixed by their label ("w5.avg_S").
inline void write_csv(std::ostream& os, const std::vector<std::pair<std::string, MetricsReport>>& reports) {
  os << "metric,value\n";
  for (const auto& [label, report] : reports)
    for (const auto& [name, value] : report.rows())
      os << (reports.size() > 1 ? label + "." + name : name) << ',' << value << '\n';
  os << "\nwindow_pct,op,mean_ns,count\n";
  for (const auto& [label, report] : reports) {
    const std::string pct = label.rfind('w', 0) == 0 ? label.substr(1) : "all";
    for (const auto& [op, t] : report.timings()) {
      if (t->count == 0) continue;
      std::ostringstream mean;
      mean.setf(std::ios::fixed);
      mean.precision(1);
      mean << *t->mean_ns();
      os << pct << ',' << op << ',' << mean.str() << ',' << t->count << '\n';
    }
  }
}

namespace detail {

using Clock = std::chrono::steady_clock;

inline double elapsed_ns(Clock::time_point since) {
  return std::chrono::duration<double, std::nano>(Clock::now() - since).count();
}

inline bool probe(DndIndex& idx, VertexId u, VertexId v) { return idx.connected(u, v); }
inline bool probe(Dnd2Index& idx, VertexId u, VertexId v) { return idx.two_edge_connected(u, v); }

inline VertexId representative(DndIndex& idx, VertexId u) { return idx.ds_forest().find_ds(u); }
inline VertexId representative(Dnd2Index& idx, VertexId u) { return idx.ds2_forest().find_ds(u); }

inline oracle::Partition truth(const DndIndex& idx) { return oracle::connectivity(idx.graph()); }
inline oracle::Partition truth(const Dnd2Index& idx) { return oracle::two_edge_components(idx.graph()); }

inline void reset_stats(DndIndex& idx) {
  idx.id_forest().reset_stats();
  idx.ds_forest().reset_stats();
}
inline void reset_stats(Dnd2Index& idx) {
  idx.ds2_forest().reset_stats();
  idx.reset_counters();
}

inline void collect_stats(const DndIndex& idx, MetricsReport& r) {
  const IdForestStats& s = idx.id_forest().stats();
  if (s.splits) r.avg_S = double(s.split_visited) / double(s.splits);
  if (s.replaced) r.avg_S_replaced = double(s.replaced_visited) / double(s.replaced);
  if (s.tree_deletions) r.avg_search = double(s.probes) / double(s.tree_deletions);
  const DsForestStats& d = idx.ds_forest().stats();
  if (d.finds) r.avg_finds_len = double(d.find_nodes) / double(d.finds);
  r.avg_depth_id = idx.id_forest().average_depth();
}
inline void collect_stats(const Dnd2Index& idx, MetricsReport& r) {
  const DsForestStats& d = idx.ds2_forest().stats();
  if (d.finds) r.avg_finds_len = double(d.find_nodes) / double(d.finds);
  r.avg_depth_id = idx.id2_forest().average_depth();
}

inline double average_depth(const DndIndex& idx) { return idx.id_forest().average_depth(); }
inline double average_depth(const Dnd2Index& idx) { return idx.id2_forest().average_depth(); }

inline void record_delete(MetricsReport& r, DeleteKind kind) {
  ++r.deletes;
  switch (kind) {
    case DeleteKind::non_tree: ++r.nontree_deletes; break;
    case DeleteKind::tree_replaced: ++r.tree_replaced; break;
    case DeleteKind::tree_split: ++r.tree_splits; break;
  }
}

template <class Index>
void run_queries(Index& idx, std::size_t count, Rng& rng, MetricsReport& r) {
  const std::size_t n = idx.num_vertices();
  if (n == 0) return;
  std::vector<std::pair<VertexId, VertexId>> pairs(count);
  for (auto& [a, b] : pairs) {
    a = static_cast<VertexId>(uniform_below(rng, n));
    b = static_cast<VertexId>(uniform_below(rng, n));
  }
  const auto start = Clock::now();
  std::uint64_t positive = 0;
  for (const auto& [a, b] : pairs) positive += probe(idx, a, b) ? 1 : 0;
  const double ns = elapsed_ns(start);
  r.queries += count;
  r.positive_queries += positive;
  r.query_time.count += count;
  r.query_time.total_ns += ns;
}

}  // namespace detail

/// Inserts every edge of the stream in order; self-loops and repeated edges
/// are counted and skipped.
template <class Index>
void build_index(Index& idx, const EdgeStream& stream, MetricsReport* report = nullptr) {
  for (const auto& ev : stream.events) {
    if (ev.kind != EventKind::insert) continue;
    if (ev.u == ev.v) {
      if (report) ++report->self_loops;
      continue;
    }
    if (idx.has_edge(ev.u, ev.v)) {
      if (report) ++report->duplicate_inserts;
      continue;
    }
    const auto start = detail::Clock::now();
    idx.insert(ev.u, ev.v);
    if (report) report->build_time.add(detail::elapsed_ns(start));
  }
}

struct CycleConfig {
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::size_t queries = 0;
  std::size_t oracle_limit = 1000;  // compare against the oracle when n <= this
};

/// Deletes k distinct uniformly chosen edges of a built index, then
/// re-inserts them in the same order. Statistics cover this phase only.
template <class Index>
MetricsReport run_random_cycle(Index& idx, const CycleConfig& cfg) {
  std::vector<Edge> edges = idx.graph().edges();
  if (cfg.k > edges.size())
    throw error(errc::k_too_large, "k=" + std::to_string(cfg.k) + " exceeds m=" + std::to_string(edges.size()));
  MetricsReport r;
  r.mode = std::is_same_v<Index, DndIndex> ? Mode::conn : Mode::two_edge;
  r.n = idx.num_vertices();

  Rng rng(cfg.seed);
  partial_shuffle(rng, std::span<Edge>(edges), cfg.k);
  const bool check = r.n <= cfg.oracle_limit;
  std::optional<oracle::Partition> before;
  if (check) before = detail::truth(idx);

  detail::reset_stats(idx);
  for (std::size_t i = 0; i < cfg.k; ++i) {
    const auto start = detail::Clock::now();
    const DeleteKind kind = idx.erase(edges[i].u, edges[i].v);
    r.delete_time.add(detail::elapsed_ns(start));
    detail::record_delete(r, kind);
  }
  for (std::size_t i = 0; i < cfg.k; ++i) {
    const auto start = detail::Clock::now();
    idx.insert(edges[i].u, edges[i].v);
    r.insert_time.add(detail::elapsed_ns(start));
    ++r.inserts;
  }
  detail::run_queries(idx, cfg.queries, rng, r);
  detail::collect_stats(idx, r);
  r.m = idx.graph().num_edges();

  if (check) {
    const oracle::Partition after = detail::truth(idx);
    const oracle::Partition mine = oracle::partition_of(r.n, [&](VertexId u) { return detail::representative(idx, u); });
    r.partition_restored = (*before == after) && (mine == after);
  }
  return r;
}

/// Builds a fresh index from the stream, then runs run_random_cycle on it.
inline MetricsReport run_random_cycle(const EdgeStream& stream, Mode mode, const CycleConfig& cfg) {
  auto go = [&](auto& idx) {
    MetricsReport build;
    build_index(idx, stream, &build);
    const double depth = detail::average_depth(idx);
    MetricsReport r = run_random_cycle(idx, cfg);
    r.build_time = build.build_time;
    r.duplicate_inserts = build.duplicate_inserts;
    r.self_loops = build.self_loops;
    r.avg_depth_id = depth;
    return r;
  };
  if (mode == Mode::conn) {
    DndIndex idx(stream.n);
    return go(idx);
  }
  Dnd2Index idx(stream.n);
  return go(idx);
}

struct WindowConfig {
  double fraction = 1.0;  // window length as a fraction of the stream's time span
  std::uint64_t seed = 0;
  std::size_t queries = 0;
};

/// Replays a timestamped stream in time order through a sliding window: after
/// each arrival, edges older than the window (strictly) are deleted.
template <class Index>
MetricsReport run_sliding_window(Index& idx, const EdgeStream& stream, const WindowConfig& cfg) {
  if (!stream.timestamped()) throw error(errc::missing_timestamps, "sliding windows need a timestamp on every row");
  MetricsReport r;
  r.mode = std::is_same_v<Index, DndIndex> ? Mode::conn : Mode::two_edge;
  r.n = idx.num_vertices();

  std::vector<WorkloadEvent> events;
  for (const auto& ev : stream.events)
    if (ev.kind == EventKind::insert) events.push_back(ev);
  std::stable_sort(events.begin(), events.end(), [](const auto& a, const auto& b) { return *a.t < *b.t; });
  if (events.empty()) return r;
  const double span = double(*events.back().t - *events.front().t);
  const double window = cfg.fraction * span;

  detail::reset_stats(idx);
  std::deque<std::pair<Edge, std::int64_t>> live;
  for (const auto& ev : events) {
    const auto slide_start = detail::Clock::now();
    if (ev.u == ev.v) {
      ++r.self_loops;
    } else if (idx.has_edge(ev.u, ev.v)) {
      ++r.duplicate_inserts;
    } else {
      const auto start = detail::Clock::now();
      idx.insert(ev.u, ev.v);
      r.insert_time.add(detail::elapsed_ns(start));
      ++r.inserts;
      live.emplace_back(Edge(ev.u, ev.v), *ev.t);
    }
    while (!live.empty() && double(*ev.t - live.front().second) > window) {
      const Edge e = live.front().first;
      live.pop_front();
      const auto start = detail::Clock::now();
      const DeleteKind kind = idx.erase(e.u, e.v);
      r.delete_time.add(detail::elapsed_ns(start));
      detail::record_delete(r, kind);
    }
    r.slide_time.add(detail::elapsed_ns(slide_start));
  }
  Rng rng(cfg.seed);
  detail::run_queries(idx, cfg.queries, rng, r);
  detail::collect_stats(idx, r);
  r.m = idx.graph().num_edges();
  return r;
}

inline MetricsReport run_sliding_window(const EdgeStream& stream, Mode mode, const WindowConfig& cfg) {
  if (mode == Mode::conn) {
    DndIndex idx(stream.n);
    return run_sliding_window(idx, stream, cfg);
  }
  Dnd2Index idx(stream.n);
  return run_sliding_window(idx, stream, cfg);
}

}  // namespace dndtree
