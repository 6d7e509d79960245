#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "eqrank/eqrank.hpp"
#include "eqrank/evaluation.hpp"
#include "eqrank/generators.hpp"
#include "eqrank/hierarchy_io.hpp"
#include "eqrank/themes.hpp"
#include "eqrank/weights.hpp"
#include "oracles.hpp"

namespace eqrank {
namespace {

using testing::graph_of;

TEST(Community, WholeGraphIsPerfect) {
  auto g = graph_of(3, {{0, 1, 2}, {1, 2, 1}});
  std::vector<VertexId> all{0, 1, 2};
  EXPECT_EQ(community_index(g, all), 1.0);
}

TEST(Community, InnerAndOuter) {
  auto g = graph_of(4, {{0, 1, 3}, {1, 2, 1}, {3, 0, 5}});
  std::vector<VertexId> theme{0, 1};
  auto w = community_weights(g, theme);
  EXPECT_EQ(w.inner, 3.0);
  EXPECT_EQ(w.outer, 1.0);
  EXPECT_EQ(w.index(), 0.75);
  EXPECT_TRUE(w.ideal());
}

TEST(Community, NoOutgoingWeightCountsAsOne) {
  auto g = graph_of(2, {{1, 0, 1}});
  std::vector<VertexId> theme{0};
  EXPECT_EQ(community_index(g, theme), 1.0);
}

TEST(Community, EmptyThemeThrows) {
  auto g = graph_of(2, {{0, 1, 1}});
  EXPECT_THROW(community_index(g, {}), InputError);
}

TEST(Community, ScaleInvariantAndConserving) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = testing::random_digraph(rng, 25, 0.15, false);
    std::vector<VertexId> a, b;
    for (VertexId v = 0; v < 25; ++v) (rng() % 2 ? a : b).push_back(v);
    if (a.empty() || b.empty()) continue;
    for (double lambda : {0.5, 3.0, 10.0}) {
      std::vector<Weight> scaled(g.weights().begin(), g.weights().end());
      for (auto& w : scaled) w *= lambda;
      auto h = g.with_weights(scaled);
      EXPECT_NEAR(community_index(h, a), community_index(g, a), 1e-12);
    }
    auto wa = community_weights(g, a);
    auto wb = community_weights(g, b);
    EXPECT_NEAR(wa.inner + wa.outer + wb.inner + wb.outer, g.total_weight(), 1e-9);
    if (wa.inner + wa.outer > 0) EXPECT_EQ(wa.ideal(), wa.inner > wa.outer);
  }
}

TEST(Community, ReportWeightedMean) {
  auto g = graph_of(4, {{0, 1, 3}, {1, 2, 1}, {2, 3, 1}});
  std::vector<std::vector<VertexId>> themes{{0, 1}, {2, 3}};
  auto r = community_report(g, themes);
  EXPECT_EQ(r.index, (std::vector<double>{0.75, 1.0}));
  EXPECT_EQ(r.ideal_count, 2u);
  EXPECT_DOUBLE_EQ(r.weighted_mean, 0.875);
}

TEST(Trends, Classification) {
  std::vector<std::size_t> rising;
  for (std::size_t c = 10; c <= 110; c += 10) rising.push_back(c);
  EXPECT_EQ(classify_counts(rising, 1992, {}).trend, Trend::kGrowing);
  EXPECT_DOUBLE_EQ(fit_slope(rising), 10.0);
  std::vector<std::size_t> falling(rising.rbegin(), rising.rend());
  EXPECT_EQ(classify_counts(falling, 1992, {}).trend, Trend::kFading);
  EXPECT_EQ(classify_counts(std::vector<std::size_t>(8, 7), 1992, {}).trend, Trend::kStable);
  EXPECT_EQ(classify_counts({10, 10, 10, 10, 10, 80}, 1992, {}).trend, Trend::kEmergent);
  auto single = classify_counts({0, 0, 5, 0}, 1992, {});
  EXPECT_EQ(single.trend, Trend::kUnclassified);
  EXPECT_FALSE(single.warning.empty());
  EXPECT_EQ(trend_symbol(Trend::kEmergent), "++");
  EXPECT_EQ(trend_symbol(Trend::kFading), "-");
}

TEST(Trends, YearShiftInvariance) {
  MetaStore early(6), late(6);
  const int years[] = {1994, 1995, 1995, 1996, 1996, 1996};
  for (VertexId v = 0; v < 6; ++v) {
    early.set({v, "t", {}, years[v], 0});
    late.set({v, "t", {}, years[v] + 7, 0});
  }
  std::vector<VertexId> members{0, 1, 2, 3, 4, 5};
  auto a = theme_dynamics(members, early, {1994, 1996});
  auto b = theme_dynamics(members, late, {2001, 2003});
  EXPECT_EQ(a.counts, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_EQ(a.trend, b.trend);
  EXPECT_EQ(a.trend, Trend::kGrowing);
}

TEST(Trends, UndatedMembersAreSkipped) {
  MetaStore meta(3);
  meta.set({0, "t", {}, 2000, 0});
  std::vector<VertexId> members{0, 1, 2};
  auto t = theme_dynamics(members, meta, {2000, 2002});
  EXPECT_EQ(t.counts, (std::vector<std::size_t>{1, 0, 0}));
  EXPECT_EQ(t.trend, Trend::kUnclassified);
  EXPECT_THROW(theme_dynamics(members, meta, {2002, 2000}), InputError);
}

TEST(Overlap, Basics) {
  std::vector<VertexId> theme{1, 2, 3, 4};
  std::vector<VertexId> subset{2, 3};
  std::vector<VertexId> disjoint{7, 8};
  EXPECT_EQ(reference_overlap(theme, subset), 1.0);
  EXPECT_EQ(reference_overlap(theme, disjoint), 0.0);
  std::vector<VertexId> half{1, 9};
  EXPECT_EQ(reference_overlap(theme, half), 0.5);
  EXPECT_THROW(reference_overlap(theme, std::span<const VertexId>{}), InputError);
}

TEST(Overlap, MonotoneInTheme) {
  std::vector<VertexId> external{0, 2, 4, 6, 8};
  std::vector<VertexId> theme;
  double last = 0;
  for (VertexId v = 0; v < 10; ++v) {
    theme.push_back(v);
    double now = reference_overlap(theme, external);
    EXPECT_GE(now, last);
    last = now;
  }
  EXPECT_EQ(last, 1.0);
}

TEST(Overlap, ResolvesExternalIds) {
  GraphBuilder b;
  b.add_edge("hep-th/9901001", "hep-th/9801002");
  b.add_edge("hep-th/9901003", "hep-th/9801002");
  auto g = b.build();
  std::vector<VertexId> theme{0, 1};
  std::vector<std::string> ids{"hep-th/9901001", "hep-th/9801002", "hep-th/9901003", "nope"};
  auto r = reference_overlap(theme, ids, g);
  EXPECT_EQ(r.resolved, 3u);
  EXPECT_EQ(r.matched, 2u);
  EXPECT_DOUBLE_EQ(r.overlap, 2.0 / 3.0);
  EXPECT_EQ(r.unresolved, (std::vector<std::string>{"nope"}));
  std::vector<std::string> none{"x"};
  EXPECT_THROW(reference_overlap(theme, none, g), InputError);
}

TEST(Generators, LayeredSingleLayerHasNoEdges) {
  GeneratorParams p{.vertices = 30, .layers = 1};
  auto g = generate_test_graph(GraphModel::kLayeredDag, p, 3);
  EXPECT_EQ(g.vertex_count(), 30u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Generators, LayeredEdgesGoToNextLayer) {
  GeneratorParams p{.vertices = 40, .layers = 4, .edge_probability = 0.5};
  auto g = generate_test_graph(GraphModel::kLayeredDag, p, 3);
  EXPECT_GT(g.edge_count(), 0u);
  for (const Edge& e : g.edges()) EXPECT_EQ(e.dst / 10, e.src / 10 + 1);
}

TEST(Generators, DeterministicPerSeed) {
  for (auto model : {GraphModel::kPoisson, GraphModel::kLayeredDag, GraphModel::kCitationLike}) {
    GeneratorParams p{.vertices = 200, .mean_out_degree = 5, .max_weight = 3};
    EXPECT_EQ(generate_test_graph(model, p, 99), generate_test_graph(model, p, 99));
    EXPECT_FALSE(generate_test_graph(model, p, 99) == generate_test_graph(model, p, 100));
    EXPECT_EQ(parse_graph_model(graph_model_name(model)), model);
  }
}

TEST(Generators, CitationLikeIsAcyclic) {
  GeneratorParams p{.vertices = 1000, .mean_out_degree = 12};
  auto g = generate_test_graph(GraphModel::kCitationLike, p, 5);
  EXPECT_NO_THROW(topological_order(g));
  EXPECT_GT(g.edge_count(), 9000u);
}

TEST(Generators, InvalidParamsThrow) {
  EXPECT_THROW(generate_test_graph(GraphModel::kLayeredDag, {.vertices = 3, .layers = 0}, 1),
               InputError);
  EXPECT_THROW(generate_test_graph(GraphModel::kPoisson, {.mean_out_degree = -1}, 1), InputError);
  EXPECT_THROW(generate_test_graph(GraphModel::kPoisson, {.min_weight = 3, .max_weight = 1}, 1),
               InputError);
  EXPECT_THROW(parse_graph_model("smallworld"), InputError);
}

TEST(ClusteringFile, RoundTrip) {
  GeneratorParams p{.vertices = 400, .mean_out_degree = 4};
  auto raw = generate_test_graph(GraphModel::kCitationLike, p, 17);
  auto g = compute_weights(raw, {});
  auto c = cluster_components(g, {.f_cut = 10});
  std::ostringstream out;
  save_clustering(out, c);
  std::istringstream in(out.str());
  auto back = load_clustering(in, g);
  ASSERT_EQ(back.components.size(), c.components.size());
  EXPECT_EQ(back.f_cut, c.f_cut);
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    const auto& x = c.components[i];
    const auto& y = back.components[i];
    EXPECT_EQ(x.vertices, y.vertices);
    EXPECT_EQ(x.status, y.status);
    EXPECT_EQ(x.result.orphans, y.result.orphans);
    EXPECT_EQ(x.result.hierarchy.level_sizes(), y.result.hierarchy.level_sizes());
    for (std::size_t l = 0; l < x.result.hierarchy.levels.size(); ++l) {
      EXPECT_EQ(x.result.hierarchy.levels[l].graph, y.result.hierarchy.levels[l].graph);
      EXPECT_EQ(x.result.hierarchy.levels[l].projection, y.result.hierarchy.levels[l].projection);
    }
  }
  std::ostringstream again;
  save_clustering(again, back);
  EXPECT_EQ(again.str(), out.str());
}

TEST(ClusteringFile, RejectsGarbage) {
  auto g = graph_of(2, {{0, 1, 1}});
  std::istringstream bad("{\"format\": \"other\"}");
  EXPECT_THROW(load_clustering(bad, g), InputError);
  std::istringstream not_json("nope");
  EXPECT_THROW(load_clustering(not_json, g), InputError);
}

}  // namespace
}  // namespace eqrank
