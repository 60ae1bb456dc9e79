#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ds_forest.hpp"
#include "dynamic_graph.hpp"
#include "error.hpp"
#include "rooted_forest.hpp"
#include "types.hpp"

namespace dndtree {

/// Spanning forest for 2-edge connectivity. rep(u) counts the non-tree edges
/// whose tree path crosses the edge (u, parent(u)); a tree edge with rep 0 is
/// a bridge, so each 2-edge-connected component is a subtree hanging off its
/// shallowest vertex.
class Id2Forest : public basic_rooted_forest<true> {
 public:
  /// Which endpoint of a tree edge hangs below the other, and which side of
  /// the cut is the smaller one.
  struct TreeCut {
    VertexId child = kNoVertex;
    VertexId parent = kNoVertex;
    VertexId small_root = kNoVertex;
  };

  explicit Id2Forest(std::size_t n = 0) : basic_rooted_forest(n), mark_(n, 0) {}

  std::uint32_t rep(VertexId u) const { return rep_[u]; }
  std::span<const std::uint32_t> reps() const noexcept { return rep_; }

  bool is_tree_edge(VertexId u, VertexId v) const { return parent_[u] == v || parent_[v] == u; }

  /// Removes tree edge (u, v), v = parent(u), which must have no replacement edge.
  void cut_bridge(VertexId u, VertexId v) {
    if (parent_[u] != v) throw error(errc::edge_absent, "cut_bridge: parent of " + std::to_string(u) + " is not " + std::to_string(v));
    if (rep_[u] != 0)
      throw error(errc::has_replacements, "tree edge (" + std::to_string(u) + ", " + std::to_string(v) + ") has rep " + std::to_string(rep_[u]));
    unlink(u);
  }

  /// Shallowest vertex of u's 2-edge-connected component.
  VertexId c2root(VertexId u) const {
    while (rep_[u] != 0) u = parent_[u];
    return u;
  }

  bool two_edge_connected(VertexId u, VertexId v) const { return c2root(u) == c2root(v); }

  /// End point of the subtree-size guided walk from u and v; the two must
  /// share a tree. Read-only twin of the walk used by raise_path/lower_path.
  VertexId meeting_vertex(VertexId u, VertexId v) const {
    while (u != v) {
      VertexId& f = st_size_[u] < st_size_[v] ? u : v;
      f = parent_[f];
    }
    return u;
  }

  /// Adds one replacement to every tree edge on the u-v path. on_first(w) runs
  /// whenever rep(w) goes from 0 to 1.
  template <class OnFirst>
  void raise_path(VertexId u, VertexId v, OnFirst&& on_first) {
    while (u != v) {
      VertexId& f = st_size_[u] < st_size_[v] ? u : v;
      assert(parent_[f] != kNoVertex);
      if (++rep_[f] == 1) on_first(f);
      f = parent_[f];
    }
  }

  void raise_path(VertexId u, VertexId v) {
    raise_path(u, v, [](VertexId) {});
  }

  /// Removes one replacement from every tree edge on the u-v path.
  /// on_zero(w) runs whenever rep(w) drops from 1 to 0.
  template <class OnZero>
  void lower_path(VertexId u, VertexId v, OnZero&& on_zero) {
    while (u != v) {
      VertexId& f = st_size_[u] < st_size_[v] ? u : v;
      if (parent_[f] == kNoVertex || rep_[f] == 0)
        throw error(errc::rep_underflow, "rep of " + std::to_string(f) + " would go negative");
      if (--rep_[f] == 0) on_zero(f);
      f = parent_[f];
    }
  }

  void lower_path(VertexId u, VertexId v) {
    lower_path(u, v, [](VertexId) {});
  }

  /// Registers edge (u, v), already present in the graph. Non-tree edges only
  /// raise replacement counts; the tree shape is left alone.
  template <class OnFirst>
  InsertKind insert(VertexId u, VertexId v, OnFirst&& on_first) {
    VertexId root_u = find_root(u).root;
    VertexId root_v = find_root(v).root;
    if (root_u == root_v) {
      raise_path(u, v, on_first);
      return InsertKind::non_tree_noop;
    }
    if (st_size_[root_u] > st_size_[root_v]) {
      std::swap(u, v);
      std::swap(root_u, root_v);
    }
    link(reroot(u), v, root_v);
    return InsertKind::tree_edge;
  }

  InsertKind insert(VertexId u, VertexId v) {
    return insert(u, v, [](VertexId) {});
  }

  void delete_nontree(VertexId u, VertexId v) { lower_path(u, v); }

  /// Orients tree edge (u, v) and makes the smaller side a subtree: when the
  /// child's side is the larger one, the tree is rerooted at the child so the
  /// former parent's side hangs below it.
  TreeCut orient_cut(VertexId u, VertexId v) {
    if (parent_[v] == u) std::swap(u, v);
    const VertexId root = find_root(u).root;
    if (st_size_[u] > st_size_[root] - st_size_[u]) {
      reroot(u);
      return {v, u, v};
    }
    return {u, v, u};
  }

  /// Non-tree edges with exactly one endpoint in the subtree of small_root,
  /// in breadth-first discovery order. The cut edge may still be in the graph.
  std::vector<Edge> replacement_edges(const DynamicGraph& g, VertexId small_root) {
    begin_visit();
    queue_.clear();
    queue_.push_back(small_root);
    mark_[small_root] = epoch_;
    candidates_.clear();
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const VertexId x = queue_[head];
      for (VertexId y : g.neighbors(x)) {
        if (y == parent_[x]) continue;
        if (parent_[y] == x) {
          queue_.push_back(y);
          mark_[y] = epoch_;
        } else {
          candidates_.emplace_back(x, y);
        }
      }
    }
    std::vector<Edge> out;
    for (const auto& [x, y] : candidates_)
      if (mark_[y] != epoch_) out.emplace_back(x, y);
    return out;
  }

  /// Removes tree edge (u, v), already gone from the graph, promoting the first
  /// replacement edge (if any) to a tree edge.
  DeleteKind delete_tree(const DynamicGraph& g, VertexId u, VertexId v) {
    const TreeCut cut = orient_cut(u, v);
    const std::vector<Edge> repl = replacement_edges(g, cut.small_root);
    swap_cut(cut, repl);
    return repl.empty() ? DeleteKind::tree_split : DeleteKind::tree_replaced;
  }

  /// Lowers every replacement path, cuts the now-bridge, and re-inserts the
  /// replacements so the first one becomes the new tree edge.
  void swap_cut(const TreeCut& cut, std::span<const Edge> repl) {
    for (const Edge& e : repl) lower_path(e.u, e.v);
    cut_bridge(cut.child, cut.parent);
    for (const Edge& e : repl) insert(e.u, e.v);
  }

 private:
  void begin_visit() {
    if (++epoch_ == 0) {
      std::fill(mark_.begin(), mark_.end(), 0);
      epoch_ = 1;
    }
  }

  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
  std::vector<VertexId> queue_;
  std::vector<std::pair<VertexId, VertexId>> candidates_;
};

struct Ecc2Stats {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  std::size_t two_edge_components = 0;
  std::size_t bridges = 0;
  double average_depth = 0.0;
};

struct Dnd2Counters {
  std::uint64_t splits = 0;        // split2ecc invocations
  std::uint64_t split_moved = 0;   // vertices moved to new 2ECC sets
  std::uint64_t merges = 0;        // rep 0 -> 1 unions
  std::uint64_t replacement_sets = 0;
  std::uint64_t replacement_edges = 0;
};

/// 2-edge connectivity index: Id2Forest plus a disjoint-set forest with one
/// set per 2-edge-connected component. Roots of the two forests are
/// independent of each other.
class Dnd2Index {
 public:
  explicit Dnd2Index(std::size_t n = 0) : graph_(n), id2_(n), ds2_(n) {}

  std::size_t num_vertices() const noexcept { return graph_.num_vertices(); }

  InsertKind insert(VertexId u, VertexId v) {
    graph_.check_pair(u, v);
    if (graph_.add_edge(u, v) == AddResult::duplicate)
      throw error(errc::duplicate_edge, "(" + std::to_string(u) + ", " + std::to_string(v) + ")");
    return id2_.insert(u, v, [this](VertexId w) { merge_up(w); });
  }

  DeleteKind erase(VertexId u, VertexId v) {
    graph_.check_vertex(u);
    graph_.check_vertex(v);
    if (!graph_.has_edge(u, v))
      throw error(errc::edge_absent, "(" + std::to_string(u) + ", " + std::to_string(v) + ")");
    if (!id2_.is_tree_edge(u, v)) {
      graph_.remove_edge(u, v);
      id2_.lower_path(u, v, [this](VertexId w) { split2ecc(w); });
      return DeleteKind::non_tree;
    }
    const Id2Forest::TreeCut cut = id2_.orient_cut(u, v);
    const std::vector<Edge> repl = id2_.replacement_edges(graph_, cut.small_root);
    ++counters_.replacement_sets;
    counters_.replacement_edges += repl.size();
    // the cut edge stays in the adjacency lists until the paths are lowered
    for (const Edge& e : repl) id2_.lower_path(e.u, e.v, [this](VertexId w) { split2ecc(w); });
    graph_.remove_edge(u, v);
    id2_.cut_bridge(cut.child, cut.parent);
    for (const Edge& e : repl) id2_.insert(e.u, e.v, [this](VertexId w) { merge_up(w); });
    return repl.empty() ? DeleteKind::tree_split : DeleteKind::tree_replaced;
  }

  bool two_edge_connected(VertexId u, VertexId v) {
    graph_.check_vertex(u);
    graph_.check_vertex(v);
    return ds2_.find_ds(u) == ds2_.find_ds(v);
  }

  bool connected(VertexId u, VertexId v) const {
    graph_.check_vertex(u);
    graph_.check_vertex(v);
    return id2_.same_tree(u, v);
  }

  bool has_edge(VertexId u, VertexId v) const { return graph_.has_edge(u, v); }

  Ecc2Stats ecc2_stats() const {
    Ecc2Stats s;
    s.vertices = graph_.num_vertices();
    s.edges = graph_.num_edges();
    for (VertexId u = 0; u < s.vertices; ++u) {
      if (id2_.is_root(u))
        ++s.components;
      else if (id2_.rep(u) == 0)
        ++s.bridges;
      if (ds2_.is_root(u)) ++s.two_edge_components;
    }
    s.average_depth = id2_.average_depth();
    return s;
  }

  const DynamicGraph& graph() const noexcept { return graph_; }
  const Id2Forest& id2_forest() const noexcept { return id2_; }
  Id2Forest& id2_forest() noexcept { return id2_; }
  const Ds2Forest& ds2_forest() const noexcept { return ds2_; }
  Ds2Forest& ds2_forest() noexcept { return ds2_; }
  const Dnd2Counters& counters() const noexcept { return counters_; }
  void reset_counters() noexcept { counters_ = {}; }

 private:
  // rep(w) just became 1: w and its parent now share a component
  void merge_up(VertexId w) {
    ++counters_.merges;
    ds2_.link_by_size(w, id2_.parent(w));
  }

  // rep(w) just became 0: w and its 2-edge-connected descendants leave the set
  void split2ecc(VertexId w) {
    ++counters_.splits;
    ds2_.reroot_ds(id2_.parent(w));
    ds2_.isolate(w);
    queue_.clear();
    queue_.push_back(w);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const VertexId x = queue_[head];
      for (VertexId y : graph_.neighbors(x)) {
        if (id2_.parent(y) != x || id2_.rep(y) == 0) continue;
        queue_.push_back(y);
        ds2_.isolate(y);
        ds2_.link_by_size(y, w);
        ++counters_.split_moved;
      }
    }
  }

  DynamicGraph graph_;
  Id2Forest id2_;
  Ds2Forest ds2_;
  std::vector<VertexId> queue_;
  Dnd2Counters counters_;
};

}  // namespace dndtree
