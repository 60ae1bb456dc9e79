#pragma once

#include <chrono>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "dnd_index.hpp"
#include "oracle.hpp"
#include "random.hpp"
#include "two_ecc.hpp"
#include "types.hpp"

namespace dndtree {

struct FuzzConfig {
  std::size_t n = 64;
  std::size_t ops = 50'000;
  std::uint64_t seed = 0;
  unsigned insert_pct = 40;
  unsigned delete_pct = 40;  // the rest are queries
  std::size_t partition_every = 100;  // full partition comparison period
  std::size_t rep_every = 50;  // 2ECC only: rep counts vs oracle
};

struct FuzzReport {
  std::uint64_t ops = 0;
  std::uint64_t inserts = 0;
  std::uint64_t deletes = 0;
  std::uint64_t queries = 0;
  std::uint64_t query_mismatches = 0;
  std::uint64_t partition_checks = 0;
  std::uint64_t partition_mismatches = 0;
  std::uint64_t root_checks = 0;
  std::uint64_t root_violations = 0;
  std::uint64_t rep_checks = 0;
  std::uint64_t rep_mismatches = 0;
  std::uint64_t finds = 0;
  std::uint64_t find_nodes = 0;
  double seconds = 0.0;
  std::optional<std::string> failure;  // first disagreement or exception

  bool ok() const {
    return !failure && query_mismatches == 0 && partition_mismatches == 0 && root_violations == 0 &&
           rep_mismatches == 0;
  }
  double mean_find_length() const { return finds ? double(find_nodes) / double(finds) : 0.0; }
};

namespace detail {

/// Random edge-set walk shared by both fuzzers: keeps a list of live edges so
/// deletions pick uniformly among them.
class EdgePool {
 public:
  EdgePool(std::size_t n, Rng& rng) : n_(n), rng_(rng) {}

  template <class HasEdge>
  Edge fresh(HasEdge&& has_edge) {
    for (;;) {
      const auto u = static_cast<VertexId>(uniform_below(rng_, n_));
      const auto v = static_cast<VertexId>(uniform_below(rng_, n_));
      if (u != v && !has_edge(u, v)) return Edge(u, v);
    }
  }

  void add(Edge e) { live_.push_back(e); }

  Edge take() {
    const std::size_t i = uniform_below(rng_, live_.size());
    const Edge e = live_[i];
    live_[i] = live_.back();
    live_.pop_back();
    return e;
  }

  bool empty() const { return live_.empty(); }
  bool full() const { return live_.size() == n_ * (n_ - 1) / 2; }

  std::pair<VertexId, VertexId> pair() {
    return {static_cast<VertexId>(uniform_below(rng_, n_)), static_cast<VertexId>(uniform_below(rng_, n_))};
  }

 private:
  std::size_t n_;
  Rng& rng_;
  std::vector<Edge> live_;
};

enum class FuzzOp { insert, erase, query };

inline FuzzOp draw_op(Rng& rng, const FuzzConfig& cfg, const EdgePool& pool) {
  const auto r = uniform_below(rng, 100);
  FuzzOp op = r < cfg.insert_pct ? FuzzOp::insert : r < cfg.insert_pct + cfg.delete_pct ? FuzzOp::erase : FuzzOp::query;
  if (op == FuzzOp::erase && pool.empty()) op = FuzzOp::insert;
  if (op == FuzzOp::insert && pool.full()) op = FuzzOp::erase;
  return op;
}

inline std::string where(std::uint64_t op, const std::string& what) {
  return "op " + std::to_string(op) + ": " + what;
}

}  // namespace detail

/// Random inserts, deletes and queries on a DndIndex, cross-checked against
/// the spanning forest and a BFS oracle. Roots of both forests are compared
/// after every operation.
inline FuzzReport fuzz_connectivity(const FuzzConfig& cfg) {
  FuzzReport rep;
  const auto start = std::chrono::steady_clock::now();
  Rng rng(cfg.seed);
  DndIndex idx(cfg.n);
  detail::EdgePool pool(cfg.n, rng);
  auto note = [&](const std::string& what) {
    if (!rep.failure) rep.failure = detail::where(rep.ops, what);
  };

  try {
    for (std::size_t i = 0; i < cfg.ops; ++i) {
      ++rep.ops;
      switch (detail::draw_op(rng, cfg, pool)) {
        case detail::FuzzOp::insert: {
          const Edge e = pool.fresh([&](VertexId a, VertexId b) { return idx.has_edge(a, b); });
          idx.insert(e.u, e.v);
          pool.add(e);
          ++rep.inserts;
          break;
        }
        case detail::FuzzOp::erase: {
          const Edge e = pool.take();
          idx.erase(e.u, e.v);
          ++rep.deletes;
          break;
        }
        case detail::FuzzOp::query: {
          const auto [a, b] = pool.pair();
          const bool truth = oracle::connected(idx.graph(), a, b);
          const bool by_ds = idx.connected(a, b);
          const bool by_id = idx.id_forest().same_tree(a, b);
          ++rep.queries;
          if (by_ds != truth || by_id != truth) {
            ++rep.query_mismatches;
            note("query (" + std::to_string(a) + ", " + std::to_string(b) + ") disagrees with BFS");
          }
          break;
        }
      }

      ++rep.root_checks;
      if (const std::size_t bad = idx.root_consistency_violations()) {
        rep.root_violations += bad;
        note(std::to_string(bad) + " spanning-tree roots are not disjoint-set roots");
      }

      if (cfg.partition_every && rep.ops % cfg.partition_every == 0) {
        const oracle::Partition truth = oracle::connectivity(idx.graph());
        bool same = true;
        for (VertexId a = 0; a < cfg.n; ++a)
          for (VertexId b = a + 1; b < cfg.n; ++b) {
            const bool by_ds = idx.connected(a, b);
            const bool by_id = idx.id_forest().same_tree(a, b);
            if (by_ds != truth.same(a, b) || by_id != truth.same(a, b)) same = false;
          }
        ++rep.partition_checks;
        if (!same) {
          ++rep.partition_mismatches;
          note("component partition differs from BFS");
        }
      }
    }
  } catch (const std::exception& ex) {
    note(std::string("exception: ") + ex.what());
  }
  rep.finds = idx.ds_forest().stats().finds;
  rep.find_nodes = idx.ds_forest().stats().find_nodes;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// Random inserts, deletes and queries on a Dnd2Index, checked against the
/// bridge-based oracle; rep counts are recomputed from scratch periodically.
inline FuzzReport fuzz_two_edge(const FuzzConfig& cfg) {
  FuzzReport rep;
  const auto start = std::chrono::steady_clock::now();
  Rng rng(cfg.seed);
  Dnd2Index idx(cfg.n);
  detail::EdgePool pool(cfg.n, rng);
  std::optional<oracle::Partition> truth;
  auto note = [&](const std::string& what) {
    if (!rep.failure) rep.failure = detail::where(rep.ops, what);
  };
  auto current = [&]() -> const oracle::Partition& {
    if (!truth) truth = oracle::two_edge_components(idx.graph());
    return *truth;
  };

  try {
    for (std::size_t i = 0; i < cfg.ops; ++i) {
      ++rep.ops;
      switch (detail::draw_op(rng, cfg, pool)) {
        case detail::FuzzOp::insert: {
          const Edge e = pool.fresh([&](VertexId a, VertexId b) { return idx.has_edge(a, b); });
          idx.insert(e.u, e.v);
          pool.add(e);
          truth.reset();
          ++rep.inserts;
          break;
        }
        case detail::FuzzOp::erase: {
          const Edge e = pool.take();
          idx.erase(e.u, e.v);
          truth.reset();
          ++rep.deletes;
          break;
        }
        case detail::FuzzOp::query: {
          const auto [a, b] = pool.pair();
          const bool expect = current().same(a, b);
          const bool by_ds = idx.two_edge_connected(a, b);
          const bool by_id = idx.id2_forest().two_edge_connected(a, b);
          ++rep.queries;
          if (by_ds != expect || by_id != expect) {
            ++rep.query_mismatches;
            note("2ECC query (" + std::to_string(a) + ", " + std::to_string(b) + ") disagrees with bridges");
          }
          break;
        }
      }

      if (cfg.rep_every && rep.ops % cfg.rep_every == 0) {
        const Id2Forest& f = idx.id2_forest();
        const auto counts = oracle::replacement_counts(idx.graph(), [&](VertexId u) { return f.parent(u); });
        ++rep.rep_checks;
        for (const auto& [e, c] : counts) {
          const VertexId child = f.parent(e.u) == e.v ? e.u : e.v;
          if (f.rep(child) != c) {
            ++rep.rep_mismatches;
            note("rep of tree edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") is " +
                 std::to_string(f.rep(child)) + ", expected " + std::to_string(c));
          }
        }
      }

      if (cfg.partition_every && rep.ops % cfg.partition_every == 0) {
        const oracle::Partition& expect = current();
        const oracle::Partition by_ds =
            oracle::partition_of(cfg.n, [&](VertexId u) { return idx.ds2_forest().find_ds(u); });
        const oracle::Partition by_id =
            oracle::partition_of(cfg.n, [&](VertexId u) { return idx.id2_forest().c2root(u); });
        const oracle::Partition conn = oracle::connectivity(idx.graph());
        bool conn_ok = true;
        for (VertexId a = 0; a < cfg.n && conn_ok; ++a)
          for (VertexId b = a + 1; b < cfg.n; ++b)
            if (idx.connected(a, b) != conn.same(a, b)) {
              conn_ok = false;
              break;
            }
        ++rep.partition_checks;
        if (by_ds != expect || by_id != expect || !conn_ok) {
          ++rep.partition_mismatches;
          note("2ECC partition differs from bridges");
        }
      }
    }
  } catch (const std::exception& ex) {
    note(std::string("exception: ") + ex.what());
  }
  rep.finds = idx.ds2_forest().stats().finds;
  rep.find_nodes = idx.ds2_forest().stats().find_nodes;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace dndtree
