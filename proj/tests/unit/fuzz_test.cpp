#include <gtest/gtest.h>

#include <dndtree/fuzz.hpp>

using namespace dndtree;

TEST(Fuzz, ConnectivitySeeds) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    FuzzConfig cfg;
    cfg.n = 20;
    cfg.ops = 5000;
    cfg.seed = seed;
    cfg.partition_every = 10;
    const FuzzReport r = fuzz_connectivity(cfg);
    EXPECT_TRUE(r.ok()) << "seed " << seed << ": " << r.failure.value_or("");
    EXPECT_GT(r.queries, 0u);
  }
}

TEST(Fuzz, TwoEdgeSeeds) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    FuzzConfig cfg;
    cfg.n = 16;
    cfg.ops = 4000;
    cfg.seed = seed;
    cfg.partition_every = 5;
    cfg.rep_every = 1;
    const FuzzReport r = fuzz_two_edge(cfg);
    EXPECT_TRUE(r.ok()) << "seed " << seed << ": " << r.failure.value_or("");
    EXPECT_GT(r.rep_checks, 0u);
  }
}

TEST(Fuzz, DenseTwoEdge) {
  FuzzConfig cfg;
  cfg.n = 10;
  cfg.ops = 6000;
  cfg.insert_pct = 60;
  cfg.delete_pct = 30;
  cfg.partition_every = 1;
  cfg.rep_every = 1;
  const FuzzReport r = fuzz_two_edge(cfg);
  EXPECT_TRUE(r.ok()) << r.failure.value_or("");
}

TEST(Fuzz, SameSeedSameRun) {
  FuzzConfig cfg;
  cfg.n = 16;
  cfg.ops = 2000;
  cfg.seed = 3;
  const FuzzReport a = fuzz_connectivity(cfg);
  const FuzzReport b = fuzz_connectivity(cfg);
  EXPECT_EQ(a.queries, b.queries);
  EXPECT_EQ(a.inserts, b.inserts);
  EXPECT_EQ(a.finds, b.finds);
  EXPECT_EQ(a.find_nodes, b.find_nodes);
}
