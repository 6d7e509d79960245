#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "eqrank/types.hpp"

namespace eqrank {

struct Edge {
  VertexId src = 0;
  VertexId dst = 0;
  Weight weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Bijection between opaque external ids and dense vertex ids.
class IdMap {
 public:
  IdMap() = default;
  explicit IdMap(std::vector<std::string> names);

  /// Returns the dense id for `name`, assigning the next one on first sight.
  VertexId intern(std::string_view name);
  std::optional<VertexId> find(std::string_view name) const;
  const std::string& name(VertexId v) const { return names_.at(v); }
  std::size_t size() const { return names_.size(); }
  std::span<const std::string> names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
};

/// Directed graph with nonnegative edge weights on dense ids 0..n-1.
///
/// Immutable once built. Edges are stored in CSR form sorted by (src, dst);
/// a second CSR over incoming edges is kept for co-citation counting and
/// component search. Self-loops and parallel edges are rejected by the
/// constructor; use GraphBuilder to normalize raw input.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  /// Edges must be free of self-loops and duplicates; order is irrelevant.
  WeightedDigraph(std::size_t vertex_count, std::vector<Edge> edges,
                  std::optional<IdMap> ids = std::nullopt);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return targets_.size(); }
  bool empty() const { return vertex_count_ == 0; }

  std::span<const VertexId> successors(VertexId v) const {
    return {targets_.data() + out_offsets_[v], targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const Weight> out_weights(VertexId v) const {
    return {weights_.data() + out_offsets_[v], weights_.data() + out_offsets_[v + 1]};
  }
  std::span<const VertexId> predecessors(VertexId v) const {
    return {sources_.data() + in_offsets_[v], sources_.data() + in_offsets_[v + 1]};
  }
  /// Indices into edge arrays for the incoming edges of v, parallel to predecessors(v).
  std::span<const std::size_t> in_edge_ids(VertexId v) const {
    return {in_edge_ids_.data() + in_offsets_[v], in_edge_ids_.data() + in_offsets_[v + 1]};
  }

  std::size_t out_degree(VertexId v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::size_t in_degree(VertexId v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

  /// Edge index range of v's outgoing edges.
  std::size_t out_begin(VertexId v) const { return out_offsets_[v]; }
  std::size_t out_end(VertexId v) const { return out_offsets_[v + 1]; }

  VertexId edge_source(std::size_t e) const { return edge_sources_[e]; }
  VertexId edge_target(std::size_t e) const { return targets_[e]; }
  Weight edge_weight(std::size_t e) const { return weights_[e]; }
  std::span<const Weight> weights() const { return weights_; }

  /// Edge index of (src, dst), if present.
  std::optional<std::size_t> find_edge(VertexId src, VertexId dst) const;
  std::optional<Weight> weight(VertexId src, VertexId dst) const;

  /// All edges in (src, dst) order.
  std::vector<Edge> edges() const;
  Weight total_weight() const;

  /// Same structure, new weight vector (indexed like edge ids).
  WeightedDigraph with_weights(std::vector<Weight> weights) const;

  const std::optional<IdMap>& ids() const { return ids_; }
  /// External name of v, or its decimal id when no map is attached.
  std::string name(VertexId v) const;

  friend bool operator==(const WeightedDigraph& a, const WeightedDigraph& b);

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<VertexId> targets_;
  std::vector<VertexId> edge_sources_;
  std::vector<Weight> weights_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<VertexId> sources_;
  std::vector<std::size_t> in_edge_ids_;
  std::optional<IdMap> ids_;
};

/// Counts from normalizing raw edge input.
struct NormalizationReport {
  std::size_t self_loops = 0;
  std::size_t duplicates = 0;
};

/// Collects raw edges and produces a normalized WeightedDigraph:
/// self-loops dropped, duplicates collapsed (first weight wins).
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t vertex_count = 0) : vertex_count_(vertex_count) {}

  void add_edge(VertexId src, VertexId dst, Weight w = 1.0);
  /// Adds an edge between external ids, interning them in first-appearance order.
  void add_edge(std::string_view src, std::string_view dst, Weight w = 1.0);
  /// Registers an external id without edges.
  VertexId add_vertex(std::string_view name);

  WeightedDigraph build(NormalizationReport* report = nullptr) const;

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::optional<IdMap> ids_;
};

/// Subgraph induced by `vertices` (sorted, unique), relabelled 0..k-1 in that order.
/// The id map, if any, is carried over.
WeightedDigraph induced_subgraph(const WeightedDigraph& g, std::span<const VertexId> vertices);

}  // namespace eqrank
