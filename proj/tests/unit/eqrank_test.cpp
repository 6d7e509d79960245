#include <gtest/gtest.h>

#include <random>

#include "eqrank/eqrank.hpp"
#include "oracles.hpp"

namespace eqrank {
namespace {

using testing::graph_of;

Partition blocks(std::size_t n, std::vector<std::vector<VertexId>> b) {
  return Partition::from_blocks(n, b);
}

TEST(Invert, ReversesEdgesAndKeepsWeights) {
  auto g = graph_of(2, {{0, 1, 3}});
  auto inv = invert(g);
  EXPECT_EQ(inv.edges(), (std::vector<Edge>{{1, 0, 3}}));
  EXPECT_EQ(invert(WeightedDigraph{}).vertex_count(), 0u);
}

TEST(Invert, SixVertexFixture) {
  auto g = graph_of(6, {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}, {3, 1, 4}, {4, 0, 5}, {5, 0, 6}, {2, 5, 7}});
  const std::vector<Edge> expected{{0, 4, 5}, {0, 5, 6}, {1, 0, 1}, {1, 3, 4},
                                   {2, 0, 2}, {2, 1, 3}, {5, 2, 7}};
  EXPECT_EQ(invert(g).edges(), expected);
  EXPECT_EQ(invert(invert(g)), g);
}

TEST(MaxLinks, KeepsOnlyHeaviest) {
  auto g = graph_of(3, {{0, 1, 2}, {0, 2, 1}});
  EXPECT_EQ(max_links(g).edges(), (std::vector<Edge>{{0, 1, 2}}));
}

TEST(MaxLinks, KeepsAllTies) {
  auto g = graph_of(3, {{0, 1, 2}, {0, 2, 2}});
  EXPECT_EQ(max_links(g).edge_count(), 2u);
}

TEST(MaxLinks, ZeroWeightTiesKept) {
  auto g = graph_of(3, {{0, 1, 0}, {0, 2, 0}});
  EXPECT_EQ(max_links(g).edge_count(), 2u);
}

TEST(MaxLinks, UniformWeightsIsIdentity) {
  auto g = graph_of(4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {3, 0, 1}, {2, 3, 1}});
  EXPECT_EQ(max_links(g), g);
}

TEST(CondenseScc, CycleWithTail) {
  auto f = condense_scc(graph_of(3, {{0, 1, 1}, {1, 0, 1}, {1, 2, 1}}));
  EXPECT_EQ(f.projection, blocks(3, {{0, 1}, {2}}));
  EXPECT_EQ(f.graph.edges(), (std::vector<Edge>{{0, 1, 1}}));
}

TEST(CondenseScc, DagIsUnchanged) {
  auto g = graph_of(4, {{0, 1, 1}, {0, 2, 2}, {1, 3, 3}, {2, 3, 4}});
  auto f = condense_scc(g);
  EXPECT_EQ(f.projection, Partition::singletons(4));
  EXPECT_EQ(f.graph, g);
}

TEST(CondenseScc, TwoCyclesBridgedOneWay) {
  // {0,1} and {2,3} are 2-cycles; two weight-1 bridges run from the first to the second.
  auto g = graph_of(4, {{0, 1, 1}, {1, 0, 1}, {2, 3, 1}, {3, 2, 1}, {0, 2, 1}, {1, 3, 1}});
  auto f = condense_scc(g);
  EXPECT_EQ(f.projection, blocks(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(f.graph.edges(), (std::vector<Edge>{{0, 1, 2}}));
}

TEST(CondenseScc, TwoCyclesBridgedBothWaysMerge) {
  auto g = graph_of(4, {{0, 1, 1}, {1, 0, 1}, {2, 3, 1}, {3, 2, 1}, {0, 2, 1}, {3, 1, 1}});
  auto f = condense_scc(g);
  EXPECT_EQ(f.projection.block_count(), 1u);
  EXPECT_EQ(f.graph.edge_count(), 0u);
}

TEST(CondenseScc, DeepChainDoesNotOverflowStack) {
  std::vector<Edge> edges;
  const VertexId n = 200000;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1});
  edges.push_back({n - 1, 0, 1});
  auto f = condense_scc(graph_of(n, edges));
  EXPECT_EQ(f.projection.block_count(), 1u);
}

TEST(Factor, SingletonsGiveIsomorphicGraph) {
  auto g = graph_of(3, {{0, 1, 1}, {1, 2, 2}});
  EXPECT_EQ(factor(g, Partition::singletons(3)).graph, g);
}

TEST(Factor, OneBlockGivesSingleVertex) {
  auto f = factor(graph_of(3, {{0, 1, 1}, {1, 2, 2}}), Partition::single_block(3));
  EXPECT_EQ(f.graph.vertex_count(), 1u);
  EXPECT_EQ(f.graph.edge_count(), 0u);
}

TEST(Factor, ParallelLinksAreSummed) {
  auto g = graph_of(4, {{0, 2, 1}, {1, 3, 2}, {0, 1, 7}});
  auto f = factor(g, blocks(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(f.graph.edges(), (std::vector<Edge>{{0, 1, 3}}));
}

TEST(Factor, DomainMismatchThrows) {
  EXPECT_THROW(factor(graph_of(3, {}), Partition::singletons(2)), InvariantError);
}

TEST(Sinks, Basic) {
  EXPECT_EQ(sinks(graph_of(2, {{0, 1, 1}})), (std::vector<VertexId>{1}));
  EXPECT_EQ(sinks(graph_of(1, {})), (std::vector<VertexId>{0}));
  EXPECT_TRUE(sinks(graph_of(2, {{0, 1, 1}, {1, 0, 1}})).empty());
}

TEST(RootSets, Fork) {
  auto r = root_sets(graph_of(3, {{0, 1, 1}, {0, 2, 1}}));
  EXPECT_EQ(std::vector<VertexId>(r.roots(0).begin(), r.roots(0).end()),
            (std::vector<VertexId>{1, 2}));
}

TEST(RootSets, SinkIsItsOwnRoot) {
  auto r = root_sets(graph_of(2, {{0, 1, 1}}));
  EXPECT_EQ(std::vector<VertexId>(r.roots(1).begin(), r.roots(1).end()),
            (std::vector<VertexId>{1}));
}

TEST(RootSets, DiamondSharesOneSet) {
  auto r = root_sets(graph_of(4, {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {2, 3, 1}}));
  for (VertexId v = 0; v < 4; ++v) {
    EXPECT_EQ(std::vector<VertexId>(r.roots(v).begin(), r.roots(v).end()),
              (std::vector<VertexId>{3}));
    EXPECT_EQ(r.set_id(v), r.set_id(3));
  }
  EXPECT_EQ(r.distinct_sets(), 1u);
}

TEST(RootSets, CyclicInputThrows) {
  EXPECT_THROW(root_sets(graph_of(2, {{0, 1, 1}, {1, 0, 1}})), InvariantError);
}

TEST(HubRelation, CitationChainIsOneBlock) {
  // 2 cites 1 cites 0.
  EXPECT_EQ(hub_relation(graph_of(3, {{2, 1, 1}, {1, 0, 1}})).block_count(), 1u);
}

TEST(HubRelation, DisjointEdgesGiveTwoBlocks) {
  auto g = graph_of(4, {{0, 1, 1}, {2, 3, 1}});
  EXPECT_EQ(hub_relation(g), blocks(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(auth_relation(g), blocks(4, {{0, 1}, {2, 3}}));
}

// Two modern themes rooted at the uncited papers 5 and 6. Expected partitions
// from a networkx script comparing root sets pairwise.
WeightedDigraph seven_vertex_fixture() {
  return graph_of(7, {{5, 3, 1}, {5, 2, 2}, {3, 0, 3}, {6, 4, 1}, {4, 1, 1}, {4, 0, 1}, {6, 2, 1}});
}

TEST(HubRelation, SevenVertexFixture) {
  EXPECT_EQ(hub_relation(seven_vertex_fixture()), blocks(7, {{0, 2, 3, 5}, {1, 4, 6}}));
}

TEST(AuthRelation, SevenVertexFixture) {
  EXPECT_EQ(auth_relation(seven_vertex_fixture()), blocks(7, {{0, 3}, {1}, {2, 5}, {4}, {6}}));
}

TEST(AuthRelation, ChainIsOneBlock) {
  EXPECT_EQ(auth_relation(graph_of(3, {{0, 1, 1}, {1, 2, 1}})).block_count(), 1u);
}

TEST(EqRankRelation, IntersectionSemantics) {
  auto hub = blocks(3, {{0, 1}, {2}});
  auto auth = blocks(3, {{0}, {1, 2}});
  EXPECT_EQ(intersect(hub, auth), Partition::singletons(3));
  EXPECT_EQ(intersect(hub, hub), hub);
}

TEST(EqRankRelation, SevenVertexFixture) {
  auto g = seven_vertex_fixture();
  auto expected = blocks(7, {{0, 3}, {1}, {2, 5}, {4}, {6}});
  EXPECT_EQ(eqrank_relation(g), expected);
  // Pairwise comparison of independently computed root sets.
  auto hub = testing::brute_root_partition(testing::reversed(g.edges()), 7);
  auto auth = testing::brute_root_partition(g.edges(), 7);
  EXPECT_EQ(intersect(hub, auth), expected);
}

TEST(EqRankRelation, BlockNumberingFollowsSmallestMember) {
  auto p = eqrank_relation(seven_vertex_fixture());
  for (BlockId b = 1; b < p.block_count(); ++b) {
    EXPECT_LT(p.members(b - 1).front(), p.members(b).front());
  }
}

TEST(EqRankRelation, AuthCycleCanSplitOnHubSide) {
  // 0 <-> 1 is a cycle of Max(g), but their heaviest citers 2 and 3 differ.
  auto g = graph_of(4, {{0, 1, 1}, {1, 0, 1}, {2, 0, 5}, {3, 1, 5}});
  EXPECT_EQ(auth_relation(g).block_of(0), auth_relation(g).block_of(1));
  EXPECT_NE(hub_relation(g).block_of(0), hub_relation(g).block_of(1));
  EXPECT_NE(eqrank_relation(g).block_of(0), eqrank_relation(g).block_of(1));
}

TEST(EqRankRelation, IsolatedVerticesAreSingletons) {
  auto p = eqrank_relation(graph_of(4, {{0, 1, 1}}));
  EXPECT_EQ(p, blocks(4, {{0, 1}, {2}, {3}}));
}

TEST(RootMembers, ExpandsSinkComponents) {
  // 0 -> {1,2} cycle; 3 -> 0.
  auto g = graph_of(4, {{0, 1, 1}, {1, 2, 1}, {2, 1, 1}, {3, 0, 1}});
  auto roots = root_members(g);
  for (VertexId v = 0; v < 4; ++v) EXPECT_EQ(roots[v], (std::vector<VertexId>{1, 2}));
}

TEST(PrimeOracle, DiamondCollapses) {
  auto g = graph_of(4, {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {2, 3, 1}});
  EXPECT_EQ(eqrank_prime_oracle(g), Partition::single_block(4));
}

TEST(PrimeOracle, SinkMapsToItself) {
  EXPECT_EQ(eqrank_prime_oracle(graph_of(1, {})), Partition::single_block(1));
  EXPECT_EQ(eqrank_prime_oracle(graph_of(2, {})), Partition::singletons(2));
}

TEST(PrimeOracle, RejectsCyclesAndOversize) {
  EXPECT_THROW(eqrank_prime_oracle(graph_of(2, {{0, 1, 1}, {1, 0, 1}})), InputError);
  EXPECT_THROW(eqrank_prime_oracle(graph_of(65, {})), InputError);
}

TEST(PrimeOracle, MatchesAuthRelationOnRandomDags) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = testing::random_digraph(rng, 1 + trial % 12, 0.3, true);
    ASSERT_EQ(eqrank_prime_oracle(max_links(g)), auth_relation(g)) << "trial " << trial;
    ASSERT_EQ(eqrank_prime_oracle(max_links(invert(g))), hub_relation(g)) << "trial " << trial;
  }
}

}  // namespace
}  // namespace eqrank
