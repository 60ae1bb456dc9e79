#include <map>
#include <vector>

#include <gtest/gtest.h>

#include <dndtree/oracle.hpp>
#include <dndtree/two_ecc.hpp>

#include "support.hpp"

using namespace dndtree;

namespace {

constexpr VertexId X = kNoVertex;

std::map<Edge, std::uint32_t> reps_of(const Id2Forest& f) {
  std::map<Edge, std::uint32_t> out;
  for (VertexId u = 0; u < f.size(); ++u)
    if (!f.is_root(u)) out[Edge(u, f.parent(u))] = f.rep(u);
  return out;
}

std::map<Edge, std::uint32_t> expected_reps(const DynamicGraph& g, const Id2Forest& f) {
  return oracle::replacement_counts(g, [&](VertexId u) { return f.parent(u); });
}

oracle::Partition ds2_partition(Dnd2Index& idx) {
  return oracle::partition_of(idx.num_vertices(), [&](VertexId u) { return idx.ds2_forest().find_ds(u); });
}

oracle::Partition c2_partition(const Id2Forest& f) {
  return oracle::partition_of(f.size(), [&](VertexId u) { return f.c2root(u); });
}

struct Id2Harness {
  explicit Id2Harness(std::size_t n) : g(n), f(n) {}
  void insert(VertexId u, VertexId v) {
    g.add_edge(u, v);
    f.insert(u, v);
  }
  void erase(VertexId u, VertexId v) {
    g.remove_edge(u, v);
    if (f.is_tree_edge(u, v))
      f.delete_tree(g, u, v);
    else
      f.delete_nontree(u, v);
  }
  DynamicGraph g;
  Id2Forest f;
};

}  // namespace

TEST(Id2Forest, LinkStartsAtZero) {
  Id2Harness h(4);
  h.insert(0, 1);
  h.insert(1, 2);
  h.insert(0, 2);
  const auto before = reps_of(h.f);
  h.insert(2, 3);
  const VertexId child = h.f.parent(3) == 2 ? 3 : 2;
  EXPECT_EQ(h.f.rep(child), 0u);
  for (const auto& [e, c] : before) EXPECT_EQ(reps_of(h.f).at(e), c);
}

TEST(Id2Forest, ParallelPathRaisesRep) {
  Id2Harness h(4);
  h.insert(0, 1);
  h.insert(1, 2);
  h.insert(2, 3);
  h.insert(0, 3);
  for (const auto& [e, c] : reps_of(h.f)) EXPECT_EQ(c, 1u) << e.u << "-" << e.v;
  EXPECT_EQ(reps_of(h.f), expected_reps(h.g, h.f));
}

TEST(Id2Forest, CutBridge) {
  Id2Harness h(2);
  h.insert(0, 1);
  const VertexId child = h.f.is_root(0) ? 1 : 0;
  h.f.cut_bridge(child, h.f.parent(child));
  EXPECT_TRUE(h.f.is_root(0));
  EXPECT_TRUE(h.f.is_root(1));
}

TEST(Id2Forest, CutBridgeKeepsOtherReps) {
  // cycle 0..5 hanging off 6 via bridge (6, 0), plus pendant (3, 7..9)
  Id2Harness h(10);
  for (VertexId u = 0; u < 6; ++u) h.insert(u, (u + 1) % 6);
  h.insert(6, 0);
  h.insert(3, 7);
  h.insert(7, 8);
  h.insert(8, 9);
  const auto before = reps_of(h.f);
  const VertexId child = h.f.parent(6) == 0 ? 6 : 0;
  const VertexId parent = h.f.parent(child);
  ASSERT_EQ(h.f.rep(child), 0u);
  const std::uint32_t cut = h.f.subtree_size(child);
  std::vector<std::uint32_t> anc;
  for (VertexId w = parent; w != X; w = h.f.parent(w)) anc.push_back(h.f.subtree_size(w));
  h.f.cut_bridge(child, parent);
  std::size_t i = 0;
  for (VertexId w = parent; w != X; w = h.f.parent(w)) EXPECT_EQ(h.f.subtree_size(w), anc[i++] - cut);
  auto after = reps_of(h.f);
  after[Edge(child, parent)] = 0;
  EXPECT_EQ(after, before);
}

TEST(Id2Forest, CutBridgeRejectsCoveredEdge) {
  Id2Harness h(3);
  h.insert(0, 1);
  h.insert(1, 2);
  h.insert(0, 2);
  VertexId child = 0;
  while (h.f.is_root(child)) ++child;
  try {
    h.f.cut_bridge(child, h.f.parent(child));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::has_replacements);
  }
}

TEST(Id2Forest, RerootCarriesRepsWithEdges) {
  dndtree::testing::Shaped<Id2Forest> f(3);
  f.assign({X, 0, 1});  // r = 0, a = 1, b = 2
  f.raise_path(1, 0);
  f.raise_path(1, 0);
  ASSERT_EQ(f.rep(1), 2u);
  ASSERT_EQ(f.rep(2), 0u);
  f.reroot(2);
  EXPECT_EQ(f.rep(1), 0u);  // edge (a, b), now with a below b
  EXPECT_EQ(f.rep(0), 2u);  // edge (r, a), now with r below a
  EXPECT_EQ(f.rep(2), 0u);
}

TEST(Id2Forest, QueryOnPathAndTriangle) {
  Id2Harness h(3);
  h.insert(0, 1);
  h.insert(1, 2);
  EXPECT_FALSE(h.f.two_edge_connected(0, 2));
  EXPECT_TRUE(h.f.two_edge_connected(1, 1));
  h.insert(0, 2);
  for (VertexId a = 0; a < 3; ++a)
    for (VertexId b = 0; b < 3; ++b) EXPECT_TRUE(h.f.two_edge_connected(a, b));
  for (const auto& [e, c] : reps_of(h.f)) EXPECT_EQ(c, 1u);
}

TEST(Id2Forest, DeleteChordRestoresZero) {
  Id2Harness h(3);
  h.insert(0, 1);
  h.insert(1, 2);
  h.insert(0, 2);
  Edge chord;
  for (Edge e : {Edge(0, 1), Edge(1, 2), Edge(0, 2)})
    if (!h.f.is_tree_edge(e.u, e.v)) chord = e;
  h.erase(chord.u, chord.v);
  for (const auto& [e, c] : reps_of(h.f)) EXPECT_EQ(c, 0u);
}

TEST(Id2Forest, ReplacementEdges) {
  // bridge: nothing crosses
  Id2Harness bridge(2);
  bridge.insert(0, 1);
  bridge.g.remove_edge(0, 1);
  auto cut = bridge.f.orient_cut(0, 1);
  EXPECT_TRUE(bridge.f.replacement_edges(bridge.g, cut.small_root).empty());

  // triangle: the opposite edge
  Id2Harness tri(3);
  tri.insert(0, 1);
  tri.insert(1, 2);
  tri.insert(0, 2);
  Edge chord;
  for (Edge e : {Edge(0, 1), Edge(1, 2), Edge(0, 2)})
    if (!tri.f.is_tree_edge(e.u, e.v)) chord = e;
  const VertexId child = tri.f.is_root(chord.u) ? chord.v : chord.u;
  const VertexId parent = tri.f.parent(child);
  tri.g.remove_edge(child, parent);
  cut = tri.f.orient_cut(child, parent);
  auto repl = tri.f.replacement_edges(tri.g, cut.small_root);
  ASSERT_EQ(repl.size(), 1u);
  EXPECT_EQ(Edge(repl[0].u, repl[0].v), chord);
}

TEST(Id2Forest, ReplacementEdgesOnK4MatchCrossingCount) {
  Id2Harness h(4);
  for (VertexId a = 0; a < 4; ++a)
    for (VertexId b = a + 1; b < 4; ++b) h.insert(a, b);
  for (VertexId u = 0; u < 4; ++u) {
    if (h.f.is_root(u)) continue;
    Id2Harness k(4);
    for (VertexId a = 0; a < 4; ++a)
      for (VertexId b = a + 1; b < 4; ++b) k.insert(a, b);
    const VertexId p = k.f.parent(u);
    k.g.remove_edge(u, p);
    // side of u in the tree without (u, p)
    std::vector<bool> side(4, false);
    for (VertexId w = 0; w < 4; ++w)
      for (VertexId x = w; x != X; x = k.f.parent(x))
        if (x == u) side[w] = true;
    std::size_t crossing = 0;
    for (const Edge& e : k.g.edges())
      if (side[e.u] != side[e.v]) ++crossing;
    const auto cut = k.f.orient_cut(u, p);
    EXPECT_EQ(k.f.replacement_edges(k.g, cut.small_root).size(), crossing);
  }
}

TEST(Id2Forest, TriangleTreeDeleteLeavesPath) {
  Id2Harness h(3);
  h.insert(0, 1);
  h.insert(1, 2);
  h.insert(0, 2);
  Edge tree_edge;
  for (Edge e : {Edge(0, 1), Edge(1, 2), Edge(0, 2)})
    if (h.f.is_tree_edge(e.u, e.v)) tree_edge = e;
  h.erase(tree_edge.u, tree_edge.v);
  EXPECT_TRUE(h.f.same_tree(0, 1));
  EXPECT_TRUE(h.f.same_tree(0, 2));
  EXPECT_EQ(c2_partition(h.f), oracle::two_edge_components(h.g));
  EXPECT_EQ(oracle::two_edge_components(h.g).classes(), 3u);
}

TEST(Id2Forest, RandomOpsKeepRepsExact) {
  const std::size_t n = 40;
  Id2Harness h(n);
  Rng rng(8);
  std::vector<Edge> live;
  for (int op = 0; op < 4000; ++op) {
    if (live.empty() || uniform_below(rng, 100) < 55) {
      const Edge e(static_cast<VertexId>(uniform_below(rng, n)), static_cast<VertexId>(uniform_below(rng, n)));
      if (e.u == e.v || h.g.has_edge(e.u, e.v)) continue;
      h.insert(e.u, e.v);
      live.push_back(e);
    } else {
      const std::size_t k = uniform_below(rng, live.size());
      h.erase(live[k].u, live[k].v);
      live[k] = live.back();
      live.pop_back();
    }
    ASSERT_EQ(reps_of(h.f), expected_reps(h.g, h.f)) << "op " << op;
    if (op % 20 == 0) {
      ASSERT_EQ(c2_partition(h.f), oracle::two_edge_components(h.g));
      ASSERT_EQ(dndtree::testing::tree_partition(h.f), oracle::connectivity(h.g));
    }
  }
}

TEST(Dnd2Index, ChordCollapsesPath) {
  Dnd2Index idx(3);
  idx.insert(0, 1);
  idx.insert(1, 2);
  EXPECT_EQ(ds2_partition(idx).classes(), 3u);
  idx.insert(0, 2);
  EXPECT_EQ(ds2_partition(idx).classes(), 1u);
  EXPECT_EQ(ds2_partition(idx), oracle::two_edge_components(idx.graph()));
}

TEST(Dnd2Index, SecondReplacementMergesNothing) {
  Dnd2Index idx(4);
  idx.insert(0, 1);
  idx.insert(1, 2);
  idx.insert(2, 3);
  idx.insert(0, 3);
  const auto merges = idx.counters().merges;
  const auto before = ds2_partition(idx);
  idx.insert(0, 2);  // lifts some reps from 1 to 2 only
  EXPECT_EQ(ds2_partition(idx), before);
  EXPECT_EQ(idx.counters().merges, merges);
}

TEST(Dnd2Index, TreeInsertMergesNothing) {
  Dnd2Index idx(4);
  idx.insert(0, 1);
  idx.insert(2, 3);
  idx.insert(1, 2);
  EXPECT_EQ(idx.counters().merges, 0u);
  EXPECT_EQ(ds2_partition(idx).classes(), 4u);
}

TEST(Dnd2Index, DeleteChordSplitsTriangle) {
  Dnd2Index idx(3);
  idx.insert(0, 1);
  idx.insert(1, 2);
  idx.insert(0, 2);
  Edge chord;
  for (Edge e : {Edge(0, 1), Edge(1, 2), Edge(0, 2)})
    if (!idx.id2_forest().is_tree_edge(e.u, e.v)) chord = e;
  EXPECT_EQ(idx.erase(chord.u, chord.v), DeleteKind::non_tree);
  EXPECT_EQ(ds2_partition(idx).classes(), 3u);
}

TEST(Dnd2Index, DeleteDoublyCoveredChordKeepsCycle) {
  // tree 0-1, 0-2, 2-3 ; non-tree 1-2 and 3-0 both cover (0, 2)
  Dnd2Index idx(4);
  idx.insert(0, 1);
  idx.insert(0, 2);
  idx.insert(2, 3);
  idx.insert(1, 2);
  idx.insert(3, 0);
  const Id2Forest& f = idx.id2_forest();
  ASSERT_TRUE(f.is_tree_edge(0, 2));
  ASSERT_EQ(f.rep(f.parent(0) == 2 ? 0 : 2), 2u);
  const auto before = ds2_partition(idx);
  EXPECT_EQ(idx.erase(0, 2), DeleteKind::tree_replaced);
  EXPECT_EQ(ds2_partition(idx), before);
  EXPECT_EQ(ds2_partition(idx), oracle::two_edge_components(idx.graph()));
}

TEST(Dnd2Index, DoublyCoveredTreeEdgeCanStillSplit) {
  // 4-2, 4-1, 0-2, 1-5 as tree edges, chords 0-1 and 5-2; both chords
  // cover (1, 4), yet removing it turns (4, 2) into a bridge
  Dnd2Index idx(6);
  for (auto [u, v] : {std::pair{4u, 2u}, {4u, 1u}, {0u, 2u}, {1u, 5u}, {0u, 1u}, {5u, 2u}}) idx.insert(u, v);
  const Id2Forest& f = idx.id2_forest();
  ASSERT_TRUE(f.is_tree_edge(1, 4));
  ASSERT_EQ(f.rep(f.parent(1) == 4 ? 1 : 4), 2u);
  EXPECT_EQ(ds2_partition(idx).classes(), 2u);  // {0,1,2,4,5} and {3}
  idx.erase(1, 4);
  EXPECT_EQ(ds2_partition(idx), oracle::two_edge_components(idx.graph()));
  EXPECT_FALSE(idx.two_edge_connected(4, 2));
  EXPECT_TRUE(idx.two_edge_connected(0, 5));
}

TEST(Dnd2Index, DeleteBridge) {
  Dnd2Index idx(5);
  idx.insert(0, 1);
  idx.insert(1, 2);
  idx.insert(0, 2);
  idx.insert(2, 3);
  idx.insert(3, 4);
  const auto before = ds2_partition(idx);
  EXPECT_EQ(idx.erase(2, 3), DeleteKind::tree_split);
  EXPECT_EQ(ds2_partition(idx), before);
  EXPECT_FALSE(idx.connected(2, 3));
  EXPECT_FALSE(idx.two_edge_connected(2, 3));
}

TEST(Dnd2Index, QueryBasics) {
  Dnd2Index idx(3);
  EXPECT_TRUE(idx.two_edge_connected(1, 1));
  idx.insert(0, 1);
  EXPECT_FALSE(idx.two_edge_connected(0, 1));
  EXPECT_TRUE(idx.connected(0, 1));
}

TEST(Dnd2Index, Ecc2Stats) {
  Dnd2Index idx(5);
  idx.insert(0, 1);
  idx.insert(1, 2);
  idx.insert(0, 2);
  idx.insert(2, 3);
  const Ecc2Stats s = idx.ecc2_stats();
  EXPECT_EQ(s.components, 2u);
  EXPECT_EQ(s.two_edge_components, 3u);
  EXPECT_EQ(s.bridges, 1u);
  EXPECT_EQ(s.bridges, oracle::bridges(idx.graph()).size());
}
