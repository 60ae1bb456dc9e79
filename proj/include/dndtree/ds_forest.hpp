#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "types.hpp"

namespace dndtree {

struct DsForestStats {
  std::uint64_t finds = 0;
  std::uint64_t find_nodes = 0;  // nodes on the walked paths, endpoints included
  std::uint64_t isolates = 0;
  std::uint64_t child_moves = 0;  // children re-hung by isolate
};

/// Disjoint-set forest that supports deleting single elements.
///
/// Nodes live in an arena and refer to each other by handle, so two vertices
/// can trade places (reroot) by swapping their handle mapping. Each node's
/// children sit on an intrusive circular doubly linked list closed by a
/// per-node sentinel, giving O(1) child insertion and removal.
///
/// With TrackSize, every root also carries the size of its set and
/// link_by_size performs union by size.
template <bool TrackSize>
class basic_ds_forest {
  using Handle = std::uint32_t;
  static constexpr Handle kNull = std::numeric_limits<Handle>::max();

  struct Node {
    VertexId id = 0;
    Handle parent = kNull;
    Handle pre = kNull;
    Handle next = kNull;
  };

 public:
  explicit basic_ds_forest(std::size_t n = 0)
      : n_(static_cast<Handle>(n)), nodes_(2 * n), node_of_(n), dsize_(TrackSize ? n : 0, 1) {
    for (Handle h = 0; h < n_; ++h) {
      nodes_[h] = Node{h, h, kNull, kNull};
      const Handle s = sentinel(h);
      nodes_[s] = Node{kNoVertex, kNull, s, s};
      node_of_[h] = h;
    }
  }

  std::size_t size() const noexcept { return n_; }

  bool is_root(VertexId u) const {
    const Handle h = node_of_[u];
    return nodes_[h].parent == h;
  }

  /// Vertex stored at u's parent node; u itself when u is a root.
  VertexId parent(VertexId u) const { return nodes_[nodes_[node_of_[u]].parent].id; }

  std::vector<VertexId> children(VertexId u) const {
    std::vector<VertexId> out;
    const Handle s = sentinel(node_of_[u]);
    for (Handle c = nodes_[s].next; c != s; c = nodes_[c].next) out.push_back(nodes_[c].id);
    return out;
  }

  /// Same as children(u) but walking the list tail to head.
  std::vector<VertexId> children_reversed(VertexId u) const {
    std::vector<VertexId> out;
    const Handle s = sentinel(node_of_[u]);
    for (Handle c = nodes_[s].pre; c != s; c = nodes_[c].pre) out.push_back(nodes_[c].id);
    return out;
  }

  /// Removes u from its parent's child list and makes it a root.
  void unlink_ds(VertexId u) {
    const Handle h = node_of_[u];
    if (nodes_[h].parent == h) throw error(errc::is_root, "unlink_ds on root " + std::to_string(u));
    splice_out(h);
  }

  /// Makes root u a child of root v. The caller guarantees |set(u)| <= |set(v)|.
  void link_ds(VertexId u, VertexId v) {
    const Handle hu = node_of_[u];
    const Handle hv = node_of_[v];
    if (nodes_[hu].parent != hu || nodes_[hv].parent != hv)
      throw error(errc::not_root, "link_ds(" + std::to_string(u) + ", " + std::to_string(v) + ")");
    push_child(hu, hv);
  }

  /// Root of u's set with full path compression.
  VertexId find_ds(VertexId u) {
    ++stats_.finds;
    const Handle h = node_of_[u];
    Handle root = h;
    std::uint64_t walked = 1;
    while (nodes_[root].parent != root) {
      root = nodes_[root].parent;
      ++walked;
    }
    stats_.find_nodes += walked;
    Handle x = h;
    while (x != root) {
      const Handle up = nodes_[x].parent;
      if (up != root) {
        splice_out(x);
        push_child(x, root);
      }
      x = up;
    }
    return nodes_[root].id;
  }

  /// Root of u's set without compressing or touching statistics.
  VertexId peek_root(VertexId u) const {
    Handle h = node_of_[u];
    while (nodes_[h].parent != h) h = nodes_[h].parent;
    return nodes_[h].id;
  }

  /// Removes non-root u from its set; u's children move under the set root.
  void isolate(VertexId u) {
    const Handle hu = node_of_[u];
    const Handle root = node_of_[find_ds(u)];
    if (root == hu) throw error(errc::is_root, "isolate on root " + std::to_string(u));
    ++stats_.isolates;
    splice_out(hu);
    const Handle s = sentinel(hu);
    while (nodes_[s].next != s) {
      const Handle c = nodes_[s].next;
      splice_out(c);
      push_child(c, root);
      ++stats_.child_moves;
    }
    if constexpr (TrackSize) {
      dsize_[root] -= 1;
      dsize_[hu] = 1;
    }
  }

  /// Makes u the root of its set by trading arena slots with the current root.
  void reroot_ds(VertexId u) {
    const VertexId r = find_ds(u);
    if (r == u) return;
    std::swap(node_of_[u], node_of_[r]);
    nodes_[node_of_[u]].id = u;
    nodes_[node_of_[r]].id = r;
  }

  /// Set size; only meaningful when u is a root.
  std::uint32_t dsize(VertexId u) const
    requires TrackSize
  {
    return dsize_[node_of_[u]];
  }

  /// Union by size of the sets holding a and b. Returns the surviving root.
  VertexId link_by_size(VertexId a, VertexId b)
    requires TrackSize
  {
    VertexId ra = find_ds(a);
    VertexId rb = find_ds(b);
    if (ra == rb) return ra;
    if (dsize(rb) <= dsize(ra)) std::swap(ra, rb);
    dsize_[node_of_[rb]] += dsize_[node_of_[ra]];
    push_child(node_of_[ra], node_of_[rb]);
    return rb;
  }

  const DsForestStats& stats() const noexcept { return stats_; }
  void reset_stats() noexcept { stats_ = {}; }

 private:
  Handle sentinel(Handle h) const noexcept { return n_ + h; }

  void splice_out(Handle h) {
    Node& x = nodes_[h];
    nodes_[x.pre].next = x.next;
    nodes_[x.next].pre = x.pre;
    x.parent = h;
    x.pre = kNull;
    x.next = kNull;
  }

  void push_child(Handle child, Handle parent) {
    const Handle s = sentinel(parent);
    Node& c = nodes_[child];
    c.parent = parent;
    c.pre = s;
    c.next = nodes_[s].next;
    nodes_[c.next].pre = child;
    nodes_[s].next = child;
  }

  Handle n_;
  std::vector<Node> nodes_;
  std::vector<Handle> node_of_;
  std::vector<std::uint32_t> dsize_;
  DsForestStats stats_;
};

using DsForest = basic_ds_forest<false>;
using Ds2Forest = basic_ds_forest<true>;

}  // namespace dndtree
