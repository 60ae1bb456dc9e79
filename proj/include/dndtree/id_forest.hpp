#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dynamic_graph.hpp"
#include "rooted_forest.hpp"
#include "types.hpp"

namespace dndtree {

struct IdInsertOutcome {
  InsertKind kind = InsertKind::non_tree_noop;
  VertexId root = kNoVertex;           // root of the tree holding u and v afterwards
  VertexId absorbed_root = kNoVertex;  // tree_edge: old root of the smaller tree
  VertexId kept_root = kNoVertex;      // tree_edge: old root of the larger tree
};

/// Result of removing an edge from the spanning forest.
///
/// For tree_split, `visited` is exactly the vertex set of the detached tree
/// rooted at small_root. The span points into forest-owned scratch memory and
/// stays valid until the next call to IdForest::remove.
struct DeletionOutcome {
  DeleteKind kind = DeleteKind::non_tree;
  VertexId small_root = kNoVertex;
  VertexId big_root = kNoVertex;
  std::span<const VertexId> visited;

  bool succ() const noexcept { return kind != DeleteKind::tree_split; }
};

struct IdForestStats {
  std::uint64_t tree_deletions = 0;
  std::uint64_t probes = 0;  // neighbor-loop iterations of replacement searches
  std::uint64_t splits = 0;
  std::uint64_t split_visited = 0;
  std::uint64_t replaced = 0;
  std::uint64_t replaced_visited = 0;
};

/// Spanning forest index for connectivity: parent pointers and subtree sizes
/// only, with the depth-halving rule for non-tree insertions and an
/// early-terminating replacement search for tree deletions.
class IdForest : public basic_rooted_forest<false> {
 public:
  explicit IdForest(std::size_t n = 0) : basic_rooted_forest(n), mark_(n, 0) {}

  bool connected(VertexId u, VertexId v) const { return same_tree(u, v); }

  /// Registers edge (u, v), which must already be present in the graph.
  IdInsertOutcome insert(VertexId u, VertexId v) {
    return insert(u, v, find_root(u).root, find_root(v).root);
  }

  /// Same as insert(u, v) with the two tree roots supplied by the caller.
  IdInsertOutcome insert(VertexId u, VertexId v, VertexId root_u, VertexId root_v) {
    if (root_u == root_v) {
      std::uint32_t du = find_root(u).depth;
      std::uint32_t dv = find_root(v).depth;
      if (du < dv) {
        std::swap(u, v);
        std::swap(du, dv);
      }
      const std::uint32_t gap = du - dv;
      if (gap <= 1) return {InsertKind::non_tree_noop, root_u};
      VertexId w = u;
      for (std::uint32_t step = 1; step < (gap + 1) / 2; ++step) w = parent_[w];
      unlink(w);
      const VertexId root = link(reroot(u), v, root_v);
      return {InsertKind::non_tree_rewired, root};
    }
    if (st_size_[root_u] > st_size_[root_v]) {
      std::swap(u, v);
      std::swap(root_u, root_v);
    }
    const VertexId root = link(reroot(u), v, root_v);
    return {InsertKind::tree_edge, root, root_u, root_v};
  }

  /// Unregisters edge (u, v), which must already be gone from the graph.
  DeletionOutcome remove(const DynamicGraph& g, VertexId u, VertexId v) {
    if (parent_[u] != v && parent_[v] != u) return {};
    if (parent_[v] == u) std::swap(u, v);
    ++stats_.tree_deletions;
    VertexId root_v = unlink(u);
    if (st_size_[root_v] < st_size_[u]) std::swap(u, root_v);

    begin_visit();
    queue_.clear();
    queue_.push_back(u);
    visit(u);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const VertexId x = queue_[head];
      for (VertexId y : g.neighbors(x)) {
        ++stats_.probes;
        if (y == parent_[x]) continue;
        if (parent_[y] == x) {
          queue_.push_back(y);
          visit(y);
          continue;
        }
        bool succ = true;
        for (VertexId w = y; w != kNoVertex; w = parent_[w]) {
          if (visited(w)) {
            succ = false;
            break;
          }
          visit(w);
        }
        if (succ) {
          ++stats_.replaced;
          stats_.replaced_visited += visited_.size();
          const VertexId root = link(reroot(x), y, root_v);
          return {DeleteKind::tree_replaced, u, root, visited_};
        }
      }
    }
    ++stats_.splits;
    stats_.split_visited += visited_.size();
    return {DeleteKind::tree_split, u, root_v, visited_};
  }

  const IdForestStats& stats() const noexcept { return stats_; }
  void reset_stats() noexcept { stats_ = {}; }

 private:
  void begin_visit() {
    visited_.clear();
    if (++epoch_ == 0) {
      std::fill(mark_.begin(), mark_.end(), 0);
      epoch_ = 1;
    }
  }
  bool visited(VertexId w) const { return mark_[w] == epoch_; }
  void visit(VertexId w) {
    if (mark_[w] == epoch_) return;
    mark_[w] = epoch_;
    visited_.push_back(w);
  }

  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
  std::vector<VertexId> visited_;
  std::vector<VertexId> queue_;
  IdForestStats stats_;
};

}  // namespace dndtree
