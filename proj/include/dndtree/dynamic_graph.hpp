#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "types.hpp"

namespace dndtree {

/// Undirected simple graph over a fixed vertex universe [0, n).
///
/// Each vertex keeps a dense neighbor vector; a hash map from the canonical
/// edge key to the two slot positions makes insert, remove and membership
/// O(1) amortized while neighbor scans stay contiguous.
class DynamicGraph {
 public:
  explicit DynamicGraph(std::size_t n = 0) : adj_(n) {}

  std::size_t num_vertices() const noexcept { return adj_.size(); }
  std::size_t num_edges() const noexcept { return slots_.size(); }

  AddResult add_edge(VertexId u, VertexId v) {
    check_pair(u, v);
    const Edge e(u, v);
    auto [it, inserted] = slots_.try_emplace(e.key(), Slots{});
    if (!inserted) return AddResult::duplicate;
    it->second.in_u = static_cast<std::uint32_t>(adj_[e.u].size());
    it->second.in_v = static_cast<std::uint32_t>(adj_[e.v].size());
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    return AddResult::added;
  }

  RemoveResult remove_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return RemoveResult::absent;
    const Edge e(u, v);
    auto it = slots_.find(e.key());
    if (it == slots_.end()) return RemoveResult::absent;
    const Slots s = it->second;
    slots_.erase(it);
    erase_slot(e.u, s.in_u);
    erase_slot(e.v, s.in_v);
    return RemoveResult::removed;
  }

  bool has_edge(VertexId u, VertexId v) const {
    if (u >= adj_.size() || v >= adj_.size() || u == v) return false;
    return slots_.count(Edge(u, v).key()) != 0;
  }

  /// Current neighbors of u. Invalidated by any mutation of the graph.
  std::span<const VertexId> neighbors(VertexId u) const {
    check_vertex(u);
    return adj_[u];
  }

  std::size_t degree(VertexId u) const {
    check_vertex(u);
    return adj_[u].size();
  }

  /// All edges in canonical form, ordered by (u, v).
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges());
    for (VertexId u = 0; u < adj_.size(); ++u)
      for (VertexId w : adj_[u])
        if (u < w) out.emplace_back(u, w);
    std::sort(out.begin(), out.end());
    return out;
  }

  void check_vertex(VertexId u) const {
    if (u >= adj_.size())
      throw error(errc::out_of_range,
                  "vertex " + std::to_string(u) + " not in [0, " + std::to_string(adj_.size()) + ")");
  }

  void check_pair(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw error(errc::self_loop, "edge (" + std::to_string(u) + ", " + std::to_string(u) + ")");
  }

 private:
  struct Slots {
    std::uint32_t in_u = 0;  // position of v inside adj_[u]
    std::uint32_t in_v = 0;  // position of u inside adj_[v]
  };

  // swap-pop the entry at `pos` of adj_[x], then repair the slot of the moved entry
  void erase_slot(VertexId x, std::uint32_t pos) {
    auto& list = adj_[x];
    const VertexId moved = list.back();
    list[pos] = moved;
    list.pop_back();
    if (pos == list.size()) return;
    Slots& s = slots_.find(Edge(x, moved).key())->second;
    (x < moved ? s.in_u : s.in_v) = pos;
  }

  std::vector<std::vector<VertexId>> adj_;
  std::unordered_map<std::uint64_t, Slots> slots_;
};

}  // namespace dndtree
