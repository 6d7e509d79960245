#include <benchmark/benchmark.h>

#include <map>

#include "eqrank/eqrank.hpp"
#include "eqrank/generators.hpp"
#include "eqrank/ranking.hpp"
#include "eqrank/themes.hpp"
#include "eqrank/weights.hpp"

namespace {

using namespace eqrank;

// Synthetic citation graphs with out-degree 12, cached per size.
const WeightedDigraph& citation_graph(std::size_t n) {
  static std::map<std::size_t, WeightedDigraph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    GeneratorParams p{.vertices = n, .mean_out_degree = 12};
    it = cache.emplace(n, compute_weights(generate_test_graph(GraphModel::kCitationLike, p, 2003))).first;
  }
  return it->second;
}

void BM_ComputeWeights(benchmark::State& state) {
  GeneratorParams p{.vertices = static_cast<std::size_t>(state.range(0)), .mean_out_degree = 12};
  const auto raw = generate_test_graph(GraphModel::kCitationLike, p, 2003);
  for (auto _ : state) benchmark::DoNotOptimize(compute_weights(raw));
  state.SetComplexityN(state.range(0));
}

void BM_EqRankRelation(benchmark::State& state) {
  const auto& g = citation_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eqrank_relation(g));
  state.SetComplexityN(state.range(0));
}

// Root sets alone, on the condensed max-link graph.
void BM_RootSets(benchmark::State& state) {
  const auto dag = condense_scc(max_links(citation_graph(static_cast<std::size_t>(state.range(0))))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(root_sets(dag));
  state.SetComplexityN(state.range(0));
}

void BM_Pipeline(benchmark::State& state) {
  GeneratorParams p{.vertices = static_cast<std::size_t>(state.range(0)), .mean_out_degree = 12};
  const auto raw = generate_test_graph(GraphModel::kCitationLike, p, 2003);
  for (auto _ : state) {
    auto g = compute_weights(raw);
    auto clustering = cluster_components(g, {20});
    auto themes = collect_themes(clustering);
    auto maps = LocalMaps::from_graph(g);
    for (const auto& level : themes) {
      for (const auto& t : level) benchmark::DoNotOptimize(rank_papers(t.members, g, maps));
    }
  }
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_ComputeWeights)->Arg(1000)->Arg(3000)->Arg(10000)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_EqRankRelation)->Arg(1000)->Arg(3000)->Arg(10000)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_RootSets)->Arg(1000)->Arg(3000)->Arg(10000)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_Pipeline)->Arg(1000)->Arg(3000)->Arg(10000)->Unit(benchmark::kMillisecond)->Complexity();

BENCHMARK_MAIN();
