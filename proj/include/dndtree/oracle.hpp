#pragma once

// Brute-force ground truth for differential tests. Everything here recomputes
// from the graph alone and is O(n + m) or worse per call.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dynamic_graph.hpp"
#include "types.hpp"

namespace dndtree::oracle {

/// Vertex -> component label, labels canonicalized to the smallest member.
struct Partition {
  std::vector<VertexId> labels;

  bool same(VertexId u, VertexId v) const { return labels[u] == labels[v]; }

  std::size_t classes() const {
    std::size_t c = 0;
    for (VertexId u = 0; u < labels.size(); ++u)
      if (labels[u] == u) ++c;
    return c;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Canonicalizes an arbitrary labelling so equal partitions compare equal.
inline Partition canonical(std::vector<VertexId> raw) {
  std::map<VertexId, VertexId> first;
  Partition p;
  p.labels.resize(raw.size());
  for (VertexId u = 0; u < raw.size(); ++u) {
    auto [it, fresh] = first.try_emplace(raw[u], u);
    p.labels[u] = it->second;
  }
  return p;
}

/// Builds a partition from any "representative of u" function.
inline Partition partition_of(std::size_t n, const std::function<VertexId(VertexId)>& rep_of) {
  std::vector<VertexId> raw(n);
  for (VertexId u = 0; u < n; ++u) raw[u] = rep_of(u);
  return canonical(std::move(raw));
}

inline bool connected(const DynamicGraph& g, VertexId u, VertexId v) {
  if (u == v) return true;
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<VertexId> queue{u};
  seen[u] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (VertexId y : g.neighbors(queue[head])) {
      if (seen[y]) continue;
      if (y == v) return true;
      seen[y] = 1;
      queue.push_back(y);
    }
  return false;
}

namespace detail {
inline Partition components_without(const DynamicGraph& g, const std::vector<Edge>& banned_sorted) {
  const std::size_t n = g.num_vertices();
  std::vector<VertexId> label(n, kNoVertex);
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    if (label[s] != kNoVertex) continue;
    label[s] = s;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId x = queue[head];
      for (VertexId y : g.neighbors(x)) {
        if (label[y] != kNoVertex) continue;
        if (!banned_sorted.empty() && std::binary_search(banned_sorted.begin(), banned_sorted.end(), Edge(x, y)))
          continue;
        label[y] = s;
        queue.push_back(y);
      }
    }
  }
  return Partition{std::move(label)};
}
}  // namespace detail

inline Partition connectivity(const DynamicGraph& g) { return detail::components_without(g, {}); }

/// Bridges by iterative DFS low-link, sorted.
inline std::vector<Edge> bridges(const DynamicGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> disc(n, 0), low(n, 0);
  std::vector<VertexId> parent(n, kNoVertex);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<Edge> out;
  std::uint32_t timer = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (disc[s] != 0) continue;
    disc[s] = low[s] = ++timer;
    stack.assign(1, s);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      const auto nbrs = g.neighbors(x);
      if (cursor[x] < nbrs.size()) {
        const VertexId y = nbrs[cursor[x]++];
        if (y == parent[x]) continue;  // simple graph: one edge back to the parent
        if (disc[y] == 0) {
          parent[y] = x;
          disc[y] = low[y] = ++timer;
          stack.push_back(y);
        } else {
          low[x] = std::min(low[x], disc[y]);
        }
        continue;
      }
      stack.pop_back();
      const VertexId p = parent[x];
      if (p != kNoVertex) {
        low[p] = std::min(low[p], low[x]);
        if (low[x] > disc[p]) out.emplace_back(p, x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// 2-edge-connected components: connected components after removing bridges.
inline Partition two_edge_components(const DynamicGraph& g) {
  return detail::components_without(g, bridges(g));
}

/// Replacement count of every tree edge of the forest given by parent_of,
/// keyed by the tree edge. Each non-tree edge adds one along its tree path.
inline std::map<Edge, std::uint32_t> replacement_counts(const DynamicGraph& g,
                                                        const std::function<VertexId(VertexId)>& parent_of) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> depth(n, 0);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId w = parent_of(u); w != kNoVertex; w = parent_of(w)) ++depth[u];

  std::map<Edge, std::uint32_t> counts;
  for (VertexId u = 0; u < n; ++u)
    if (parent_of(u) != kNoVertex) counts[Edge(u, parent_of(u))] = 0;

  for (const Edge& e : g.edges()) {
    if (parent_of(e.u) == e.v || parent_of(e.v) == e.u) continue;
    VertexId a = e.u, b = e.v;
    while (a != b) {
      VertexId& deeper = depth[a] >= depth[b] ? a : b;
      if (parent_of(deeper) == kNoVertex) throw std::logic_error("replacement_counts: endpoints in different trees");
      ++counts[Edge(deeper, parent_of(deeper))];
      deeper = parent_of(deeper);
    }
  }
  return counts;
}

}  // namespace dndtree::oracle
