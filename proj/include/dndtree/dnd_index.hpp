#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <string>

#include "ds_forest.hpp"
#include "dynamic_graph.hpp"
#include "error.hpp"
#include "id_forest.hpp"
#include "types.hpp"

namespace dndtree {

struct ComponentStats {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  std::size_t largest_component = 0;
  double average_depth = 0.0;
};

/// Fully dynamic connectivity index: a spanning forest paired with a
/// deletion-capable disjoint-set forest whose roots mirror the spanning-tree
/// roots. Queries only touch the disjoint-set side.
class DndIndex {
 public:
  explicit DndIndex(std::size_t n = 0) : graph_(n), id_(n), ds_(n) {}

  std::size_t num_vertices() const noexcept { return graph_.num_vertices(); }

  InsertKind insert(VertexId u, VertexId v) {
    graph_.check_pair(u, v);
    if (graph_.add_edge(u, v) == AddResult::duplicate)
      throw error(errc::duplicate_edge, edge_name(u, v));
    const VertexId root_u = ds_.find_ds(u);
    const VertexId root_v = ds_.find_ds(v);
    assert(root_u == id_.find_root(u).root && root_v == id_.find_root(v).root);
    const IdInsertOutcome out = id_.insert(u, v, root_u, root_v);
    switch (out.kind) {
      case InsertKind::non_tree_noop:
        break;
      case InsertKind::non_tree_rewired:
        ds_.reroot_ds(out.root);
        break;
      case InsertKind::tree_edge:
        ds_.link_ds(out.absorbed_root, out.kept_root);
        ds_.reroot_ds(out.root);
        break;
    }
    return out.kind;
  }

  DeleteKind erase(VertexId u, VertexId v) {
    graph_.check_vertex(u);
    graph_.check_vertex(v);
    if (graph_.remove_edge(u, v) == RemoveResult::absent)
      throw error(errc::edge_absent, edge_name(u, v));
    const DeletionOutcome out = id_.remove(graph_, u, v);
    if (out.kind == DeleteKind::non_tree) return out.kind;
    ds_.reroot_ds(out.big_root);
    if (out.kind == DeleteKind::tree_replaced) return out.kind;
    ds_.isolate(out.small_root);
    for (VertexId w : out.visited) {
      if (w == out.small_root) continue;
      ds_.isolate(w);
      ds_.link_ds(w, out.small_root);
    }
    return out.kind;
  }

  /// Compresses disjoint-set paths; the spanning forest is not touched.
  bool connected(VertexId u, VertexId v) {
    graph_.check_vertex(u);
    graph_.check_vertex(v);
    return ds_.find_ds(u) == ds_.find_ds(v);
  }

  bool has_edge(VertexId u, VertexId v) const { return graph_.has_edge(u, v); }

  ComponentStats component_stats() const {
    ComponentStats s;
    s.vertices = graph_.num_vertices();
    s.edges = graph_.num_edges();
    for (VertexId u = 0; u < s.vertices; ++u) {
      if (!id_.is_root(u)) continue;
      ++s.components;
      s.largest_component = std::max<std::size_t>(s.largest_component, id_.subtree_size(u));
    }
    s.average_depth = id_.average_depth();
    return s;
  }

  /// Number of spanning-tree roots r whose disjoint-set root differs from r.
  std::size_t root_consistency_violations() const {
    std::size_t bad = 0;
    for (VertexId u = 0; u < graph_.num_vertices(); ++u)
      if (id_.is_root(u) && ds_.peek_root(u) != u) ++bad;
    return bad;
  }

  const DynamicGraph& graph() const noexcept { return graph_; }
  const IdForest& id_forest() const noexcept { return id_; }
  IdForest& id_forest() noexcept { return id_; }
  const DsForest& ds_forest() const noexcept { return ds_; }
  DsForest& ds_forest() noexcept { return ds_; }

 private:
  static std::string edge_name(VertexId u, VertexId v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
  }

  DynamicGraph graph_;
  IdForest id_;
  DsForest ds_;
};

}  // namespace dndtree
