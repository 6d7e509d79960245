#pragma once

#include <cstddef>

#include "eqrank/graph.hpp"
#include "eqrank/partition.hpp"

namespace eqrank {

/// Mix between co-citation (a) and bibliographic coupling (1 - a).
struct WeightConfig {
  double a = 0.9;

  void validate() const;
};

/// Number of vertices p with edges p->x and p->y.
std::size_t cocitation(const WeightedDigraph& g, VertexId x, VertexId y);
/// Number of vertices p with edges x->p and y->p.
std::size_t coupling(const WeightedDigraph& g, VertexId x, VertexId y);

/// Reweights every existing edge (x, y) with a*cocitation(x,y) + (1-a)*coupling(x,y).
/// Only pairs in E are evaluated; edges may end up with weight 0 and are kept.
WeightedDigraph compute_weights(const WeightedDigraph& g, const WeightConfig& cfg = {});

/// Maximal sets connected when edge direction is ignored.
Partition weakly_connected_components(const WeightedDigraph& g);

struct DegreeStats {
  std::size_t vertices = 0;
  double unit_out_degree = 0;  // fraction with out-degree exactly 1
  double unit_in_degree = 0;
  double sinks = 0;            // fraction with out-degree 0
  double sources = 0;          // fraction with in-degree 0
};

DegreeStats degree_stats(const WeightedDigraph& g);

}  // namespace eqrank
