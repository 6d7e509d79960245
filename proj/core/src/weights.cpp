#include "eqrank/weights.hpp"

#include <cmath>
#include <cstdint>
#include <string>

namespace eqrank {

void WeightConfig::validate() const {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw InputError("weight mix a must lie in [0, 1], got " + std::to_string(a));
  }
}

namespace {

std::size_t sorted_intersection_size(std::span<const VertexId> a, std::span<const VertexId> b) {
  std::size_t i = 0, j = 0, n = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++n, ++i, ++j;
    }
  }
  return n;
}

}  // namespace

std::size_t cocitation(const WeightedDigraph& g, VertexId x, VertexId y) {
  return sorted_intersection_size(g.predecessors(x), g.predecessors(y));
}

std::size_t coupling(const WeightedDigraph& g, VertexId x, VertexId y) {
  return sorted_intersection_size(g.successors(x), g.successors(y));
}

WeightedDigraph compute_weights(const WeightedDigraph& g, const WeightConfig& cfg) {
  cfg.validate();
  const std::size_t m = g.edge_count();
  // Co-citation is counted from the citing side: every p adds one to each
  // edge x->y with both x and y in out(p). This costs sum of out(p) * out(x)
  // instead of touching the in-lists of heavily cited papers.
  std::vector<std::uint32_t> cocited(m, 0);
  for (VertexId p = 0; p < g.vertex_count(); ++p) {
    const auto refs = g.successors(p);
    for (VertexId x : refs) {
      const auto xs = g.successors(x);
      std::size_t i = 0, j = 0;
      while (i < xs.size() && j < refs.size()) {
        if (xs[i] < refs[j]) {
          ++i;
        } else if (refs[j] < xs[i]) {
          ++j;
        } else {
          ++cocited[g.out_begin(x) + i];
          ++i, ++j;
        }
      }
    }
  }
  std::vector<Weight> weights(m, 0.0);
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    for (std::size_t e = g.out_begin(x); e < g.out_end(x); ++e) {
      const std::size_t coupled =
          sorted_intersection_size(g.successors(x), g.successors(g.edge_target(e)));
      weights[e] = cfg.a * static_cast<double>(cocited[e]) +
                   (1.0 - cfg.a) * static_cast<double>(coupled);
    }
  }
  return g.with_weights(std::move(weights));
}

Partition weakly_connected_components(const WeightedDigraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::uint64_t kUnseen = static_cast<std::uint64_t>(-1);
  std::vector<std::uint64_t> label(n, kUnseen);
  std::vector<VertexId> stack;
  std::uint64_t next = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (label[s] != kUnseen) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (auto nbrs : {g.successors(v), g.predecessors(v)}) {
        for (VertexId u : nbrs) {
          if (label[u] == kUnseen) {
            label[u] = next;
            stack.push_back(u);
          }
        }
      }
    }
    ++next;
  }
  return Partition::from_labels(label);
}

DegreeStats degree_stats(const WeightedDigraph& g) {
  DegreeStats s;
  s.vertices = g.vertex_count();
  if (s.vertices == 0) return s;
  std::size_t unit_out = 0, unit_in = 0, sinks = 0, sources = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    unit_out += g.out_degree(v) == 1;
    unit_in += g.in_degree(v) == 1;
    sinks += g.out_degree(v) == 0;
    sources += g.in_degree(v) == 0;
  }
  const double n = static_cast<double>(s.vertices);
  s.unit_out_degree = static_cast<double>(unit_out) / n;
  s.unit_in_degree = static_cast<double>(unit_in) / n;
  s.sinks = static_cast<double>(sinks) / n;
  s.sources = static_cast<double>(sources) / n;
  return s;
}

}  // namespace eqrank
