#pragma once

#include <vector>

#include <dndtree/dndtree.hpp>

namespace dndtree::testing {

// Gives tests direct control over the parent array.
template <class Forest>
struct Shaped : Forest {
  using Forest::Forest;

  void assign(const std::vector<VertexId>& parents) {
    this->parent_ = parents;
    std::fill(this->st_size_.begin(), this->st_size_.end(), 1);
    for (VertexId u = 0; u < parents.size(); ++u)
      for (VertexId w = parents[u]; w != kNoVertex; w = parents[w]) ++this->st_size_[w];
  }
};

inline DynamicGraph graph_of(std::size_t n, const std::vector<Edge>& edges) {
  DynamicGraph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

inline std::vector<Edge> random_edges(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::vector<Edge> out;
  for (const auto& ev : random_graph_stream(n, m, seed).events) out.emplace_back(ev.u, ev.v);
  return out;
}

template <class Forest>
oracle::Partition tree_partition(const Forest& f) {
  return oracle::partition_of(f.size(), [&](VertexId u) { return f.find_root(u).root; });
}

}  // namespace dndtree::testing
