#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <utility>

namespace dndtree {

using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// Undirected edge, always stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  constexpr Edge() = default;
  constexpr Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr std::uint64_t key() const noexcept {
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

enum class AddResult { added, duplicate };
enum class RemoveResult { removed, absent };

enum class InsertKind { tree_edge, non_tree_noop, non_tree_rewired };
enum class DeleteKind { non_tree, tree_replaced, tree_split };

}  // namespace dndtree

template <>
struct std::hash<dndtree::Edge> {
  std::size_t operator()(const dndtree::Edge& e) const noexcept {
    return std::hash<std::uint64_t>{}(e.key());
  }
};
