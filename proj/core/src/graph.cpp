#include "eqrank/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace eqrank {

IdMap::IdMap(std::vector<std::string> names) : names_(std::move(names)) {
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<VertexId>(i)).second) {
      throw InvariantError("duplicate external id '" + names_[i] + "'");
    }
  }
}

VertexId IdMap::intern(std::string_view name) {
  auto it = index_.find(std::string(name));
  if (it != index_.end()) return it->second;
  auto id = static_cast<VertexId>(names_.size());
  names_.emplace_back(name);
  index_.emplace(names_.back(), id);
  return id;
}

std::optional<VertexId> IdMap::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

WeightedDigraph::WeightedDigraph(std::size_t vertex_count, std::vector<Edge> edges,
                                 std::optional<IdMap> ids)
    : vertex_count_(vertex_count), ids_(std::move(ids)) {
  if (ids_ && ids_->size() != vertex_count) {
    throw InvariantError("id map size does not match vertex count");
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.src >= vertex_count || e.dst >= vertex_count) {
      throw InvariantError("edge endpoint out of range");
    }
    if (e.src == e.dst) throw InvariantError("self-loop in graph");
    if (!(e.weight >= 0) || !std::isfinite(e.weight)) {
      throw InvariantError("edge weight must be finite and nonnegative");
    }
    if (i > 0 && edges[i - 1].src == e.src && edges[i - 1].dst == e.dst) {
      throw InvariantError("duplicate edge in graph");
    }
  }

  const std::size_t m = edges.size();
  out_offsets_.assign(vertex_count + 1, 0);
  in_offsets_.assign(vertex_count + 1, 0);
  targets_.resize(m);
  edge_sources_.resize(m);
  weights_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    targets_[i] = edges[i].dst;
    edge_sources_[i] = edges[i].src;
    weights_[i] = edges[i].weight;
    ++out_offsets_[edges[i].src + 1];
    ++in_offsets_[edges[i].dst + 1];
  }
  std::partial_sum(out_offsets_.begin(), out_offsets_.end(), out_offsets_.begin());
  std::partial_sum(in_offsets_.begin(), in_offsets_.end(), in_offsets_.begin());

  // Edges are visited in (src, dst) order, so predecessor lists come out sorted.
  sources_.resize(m);
  in_edge_ids_.resize(m);
  std::vector<std::size_t> cursor(in_offsets_.begin(), in_offsets_.end() - 1);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t slot = cursor[edges[i].dst]++;
    sources_[slot] = edges[i].src;
    in_edge_ids_[slot] = i;
  }
}

std::optional<std::size_t> WeightedDigraph::find_edge(VertexId src, VertexId dst) const {
  if (src >= vertex_count_) return std::nullopt;
  auto succ = successors(src);
  auto it = std::lower_bound(succ.begin(), succ.end(), dst);
  if (it == succ.end() || *it != dst) return std::nullopt;
  return out_offsets_[src] + static_cast<std::size_t>(it - succ.begin());
}

std::optional<Weight> WeightedDigraph::weight(VertexId src, VertexId dst) const {
  if (auto e = find_edge(src, dst)) return weights_[*e];
  return std::nullopt;
}

std::vector<Edge> WeightedDigraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::size_t e = 0; e < edge_count(); ++e) {
    out.push_back({edge_sources_[e], targets_[e], weights_[e]});
  }
  return out;
}

Weight WeightedDigraph::total_weight() const {
  return std::accumulate(weights_.begin(), weights_.end(), Weight{0});
}

WeightedDigraph WeightedDigraph::with_weights(std::vector<Weight> weights) const {
  if (weights.size() != edge_count()) {
    throw InvariantError("weight vector length differs from edge count");
  }
  for (Weight w : weights) {
    if (!(w >= 0) || !std::isfinite(w)) {
      throw InvariantError("edge weight must be finite and nonnegative");
    }
  }
  WeightedDigraph out = *this;
  out.weights_ = std::move(weights);
  return out;
}

std::string WeightedDigraph::name(VertexId v) const {
  if (ids_) return ids_->name(v);
  return std::to_string(v);
}

bool operator==(const WeightedDigraph& a, const WeightedDigraph& b) {
  if (a.vertex_count_ != b.vertex_count_ || a.targets_ != b.targets_ ||
      a.out_offsets_ != b.out_offsets_ || a.weights_ != b.weights_) {
    return false;
  }
  auto names = [](const WeightedDigraph& g) {
    return g.ids_ ? std::vector<std::string>(g.ids_->names().begin(), g.ids_->names().end())
                  : std::vector<std::string>{};
  };
  return a.ids_.has_value() == b.ids_.has_value() && names(a) == names(b);
}

void GraphBuilder::add_edge(VertexId src, VertexId dst, Weight w) {
  vertex_count_ = std::max<std::size_t>(vertex_count_, std::max(src, dst) + std::size_t{1});
  edges_.push_back({src, dst, w});
}

void GraphBuilder::add_edge(std::string_view src, std::string_view dst, Weight w) {
  VertexId s = add_vertex(src);
  VertexId d = add_vertex(dst);
  edges_.push_back({s, d, w});
}

VertexId GraphBuilder::add_vertex(std::string_view name) {
  if (!ids_) {
    if (vertex_count_ != 0 || !edges_.empty()) {
      throw InvariantError("cannot mix numeric and named vertices in GraphBuilder");
    }
    ids_.emplace();
  }
  VertexId v = ids_->intern(name);
  vertex_count_ = ids_->size();
  return v;
}

WeightedDigraph GraphBuilder::build(NormalizationReport* report) const {
  NormalizationReport local;
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (e.src == e.dst) {
      ++local.self_loops;
    } else {
      kept.push_back(e);
    }
  }
  // Stable sort keeps the first occurrence of a duplicate in front.
  std::stable_sort(kept.begin(), kept.end(), [](const Edge& a, const Edge& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
  auto last = std::unique(kept.begin(), kept.end(), [](const Edge& a, const Edge& b) {
    return a.src == b.src && a.dst == b.dst;
  });
  local.duplicates = static_cast<std::size_t>(kept.end() - last);
  kept.erase(last, kept.end());
  if (report) *report = local;
  return WeightedDigraph(vertex_count_, std::move(kept), ids_);
}

WeightedDigraph induced_subgraph(const WeightedDigraph& g, std::span<const VertexId> vertices) {
  constexpr VertexId kAbsent = static_cast<VertexId>(-1);
  std::vector<VertexId> local(g.vertex_count(), kAbsent);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i > 0 && vertices[i] <= vertices[i - 1]) {
      throw InvariantError("induced_subgraph expects sorted unique vertices");
    }
    local.at(vertices[i]) = static_cast<VertexId>(i);
  }
  std::vector<Edge> edges;
  for (VertexId v : vertices) {
    auto succ = g.successors(v);
    auto w = g.out_weights(v);
    for (std::size_t k = 0; k < succ.size(); ++k) {
      if (local[succ[k]] != kAbsent) edges.push_back({local[v], local[succ[k]], w[k]});
    }
  }
  std::optional<IdMap> ids;
  if (g.ids()) {
    std::vector<std::string> names;
    names.reserve(vertices.size());
    for (VertexId v : vertices) names.push_back(g.ids()->name(v));
    ids.emplace(std::move(names));
  }
  return WeightedDigraph(vertices.size(), std::move(edges), std::move(ids));
}

}  // namespace eqrank
