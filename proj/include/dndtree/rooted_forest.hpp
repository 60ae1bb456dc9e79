#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "types.hpp"

namespace dndtree {

struct RootInfo {
  VertexId root = kNoVertex;
  std::uint32_t depth = 0;
};

/// Parent-pointer spanning forest with subtree sizes.
///
/// Shared core of the connectivity forest and the 2-edge-connectivity forest.
/// With TrackRep, every non-root vertex additionally stores the replacement
/// count of the tree edge to its parent; rotations move the count with the
/// edge so the count always describes the same undirected tree edge.
template <bool TrackRep>
class basic_rooted_forest {
 public:
  explicit basic_rooted_forest(std::size_t n = 0)
      : parent_(n, kNoVertex), st_size_(n, 1), rep_(TrackRep ? n : 0, 0) {}

  std::size_t size() const noexcept { return parent_.size(); }

  VertexId parent(VertexId u) const { return parent_[u]; }
  bool is_root(VertexId u) const { return parent_[u] == kNoVertex; }
  std::uint32_t subtree_size(VertexId u) const { return st_size_[u]; }

  std::span<const VertexId> parents() const noexcept { return parent_; }
  std::span<const std::uint32_t> subtree_sizes() const noexcept { return st_size_; }

  /// Walks parent pointers; never mutates the forest.
  RootInfo find_root(VertexId u) const {
    RootInfo info{u, 0};
    while (parent_[info.root] != kNoVertex) {
      info.root = parent_[info.root];
      ++info.depth;
    }
    return info;
  }

  bool same_tree(VertexId u, VertexId v) const { return find_root(u).root == find_root(v).root; }

  /// Rotates u's tree so that u becomes its root. Returns u.
  VertexId reroot(VertexId u) {
    path_.clear();
    for (VertexId w = u; w != kNoVertex; w = parent_[w]) path_.push_back(w);
    // flip edges top-down so each step sees its upper endpoint as the current root
    for (std::size_t i = path_.size() - 1; i-- > 0;) {
      const VertexId child = path_[i];
      const VertexId top = path_[i + 1];
      parent_[top] = child;
      parent_[child] = kNoVertex;
      if constexpr (TrackRep) std::swap(rep_[child], rep_[top]);
      st_size_[top] -= st_size_[child];
      st_size_[child] += st_size_[top];
    }
    return u;
  }

  /// Hangs the tree rooted at u below v, where root_v is v's root. Applies the
  /// centroid rule on the way up and returns the root of the merged tree.
  VertexId link(VertexId u, VertexId v, VertexId root_v) {
    parent_[u] = v;
    if constexpr (TrackRep) rep_[u] = 0;
    const std::uint32_t added = st_size_[u];
    const std::uint64_t total = std::uint64_t{st_size_[root_v]} + added;
    VertexId centroid = kNoVertex;
    for (VertexId w = v; w != kNoVertex; w = parent_[w]) {
      st_size_[w] += added;
      if (centroid == kNoVertex && 2 * std::uint64_t{st_size_[w]} > total) centroid = w;
    }
    if (centroid != root_v) {
      reroot(centroid);
      return centroid;
    }
    return root_v;
  }

  /// Detaches the subtree of u. Returns the root of the tree u was cut from.
  VertexId unlink(VertexId u) {
    const VertexId p = parent_[u];
    if (p == kNoVertex) throw error(errc::already_root, "vertex " + std::to_string(u) + " has no parent");
    parent_[u] = kNoVertex;
    const std::uint32_t removed = st_size_[u];
    VertexId w = p;
    for (;;) {
      st_size_[w] -= removed;
      if (parent_[w] == kNoVertex) return w;
      w = parent_[w];
    }
  }

  /// Mean number of parent hops over all vertices.
  double average_depth() const {
    if (size() == 0) return 0.0;
    // every vertex is counted once per strict ancestor
    std::uint64_t total = 0;
    for (VertexId u = 0; u < size(); ++u) total += st_size_[u] - 1;
    return static_cast<double>(total) / static_cast<double>(size());
  }

 protected:
  std::vector<VertexId> parent_;
  std::vector<std::uint32_t> st_size_;
  std::vector<std::uint32_t> rep_;
  std::vector<VertexId> path_;  // scratch for reroot
};

}  // namespace dndtree
