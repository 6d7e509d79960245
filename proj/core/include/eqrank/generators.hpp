#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "eqrank/graph.hpp"

namespace eqrank {

enum class GraphModel {
  /// Every ordered pair is an edge with probability mean_out_degree / (n - 1).
  kPoisson,
  /// `layers` layers of `vertices / layers` vertices; edges only to the next
  /// layer, each with probability edge_probability.
  kLayeredDag,
  /// Vertex i cites min(i, ~mean_out_degree) earlier vertices chosen with
  /// probability proportional to in-degree + 1. Always acyclic.
  kCitationLike,
};

GraphModel parse_graph_model(std::string_view name);
std::string_view graph_model_name(GraphModel m);

struct GeneratorParams {
  std::size_t vertices = 100;
  double mean_out_degree = 12.0;
  std::size_t layers = 4;
  double edge_probability = 0.2;
  /// Integer weights drawn uniformly from [min_weight, max_weight].
  std::uint32_t min_weight = 1;
  std::uint32_t max_weight = 1;

  void validate(GraphModel m) const;
};

/// Same (model, params, seed) always yields the same graph.
WeightedDigraph generate_test_graph(GraphModel model, const GeneratorParams& params,
                                    std::uint64_t seed);

}  // namespace eqrank
