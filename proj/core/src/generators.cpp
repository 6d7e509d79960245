#include "eqrank/generators.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_set>

namespace eqrank {

GraphModel parse_graph_model(std::string_view name) {
  if (name == "poisson") return GraphModel::kPoisson;
  if (name == "layered_dag") return GraphModel::kLayeredDag;
  if (name == "citation_like") return GraphModel::kCitationLike;
  throw InputError("unknown graph model '" + std::string(name) +
                   "' (expected poisson, layered_dag or citation_like)");
}

std::string_view graph_model_name(GraphModel m) {
  switch (m) {
    case GraphModel::kPoisson: return "poisson";
    case GraphModel::kLayeredDag: return "layered_dag";
    case GraphModel::kCitationLike: return "citation_like";
  }
  return "?";
}

void GeneratorParams::validate(GraphModel m) const {
  if (min_weight > max_weight) throw InputError("min_weight exceeds max_weight");
  if (!(mean_out_degree >= 0)) throw InputError("mean_out_degree must be nonnegative");
  if (m == GraphModel::kLayeredDag) {
    if (layers < 1) throw InputError("layered_dag needs at least one layer");
    if (vertices < layers) throw InputError("layered_dag needs at least one vertex per layer");
    if (!(edge_probability >= 0 && edge_probability <= 1)) {
      throw InputError("edge_probability must lie in [0, 1]");
    }
  }
}

WeightedDigraph generate_test_graph(GraphModel model, const GeneratorParams& params,
                                    std::uint64_t seed) {
  params.validate(model);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> weight_dist(params.min_weight, params.max_weight);
  const std::size_t n = params.vertices;
  std::vector<Edge> edges;
  auto add = [&](std::size_t src, std::size_t dst) {
    edges.push_back({static_cast<VertexId>(src), static_cast<VertexId>(dst),
                     static_cast<Weight>(weight_dist(rng))});
  };

  switch (model) {
    case GraphModel::kPoisson: {
      if (n < 2) break;
      const double p = std::min(1.0, params.mean_out_degree / static_cast<double>(n - 1));
      std::bernoulli_distribution coin(p);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (x != y && coin(rng)) add(x, y);
        }
      }
      break;
    }
    case GraphModel::kLayeredDag: {
      const std::size_t width = n / params.layers;
      std::bernoulli_distribution coin(params.edge_probability);
      for (std::size_t layer = 0; layer + 1 < params.layers; ++layer) {
        for (std::size_t i = 0; i < width; ++i) {
          for (std::size_t j = 0; j < width; ++j) {
            if (coin(rng)) add(layer * width + i, (layer + 1) * width + j);
          }
        }
      }
      break;
    }
    case GraphModel::kCitationLike: {
      // Each vertex appears in the urn once plus once per citation received.
      std::vector<VertexId> urn;
      urn.reserve(n * static_cast<std::size_t>(params.mean_out_degree + 2));
      std::poisson_distribution<std::size_t> references(params.mean_out_degree);
      std::unordered_set<VertexId> chosen;
      for (std::size_t v = 0; v < n; ++v) {
        const std::size_t k = std::min(v, references(rng));
        chosen.clear();
        if (k == v) {
          for (std::size_t u = 0; u < v; ++u) chosen.insert(static_cast<VertexId>(u));
        } else {
          std::uniform_int_distribution<std::size_t> pick(0, urn.size() - 1);
          while (chosen.size() < k) chosen.insert(urn[pick(rng)]);
        }
        std::vector<VertexId> targets(chosen.begin(), chosen.end());
        std::sort(targets.begin(), targets.end());
        for (VertexId u : targets) {
          add(v, u);
          urn.push_back(u);
        }
        urn.push_back(static_cast<VertexId>(v));
      }
      break;
    }
  }
  return WeightedDigraph(n, std::move(edges));
}

}  // namespace eqrank
