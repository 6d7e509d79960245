#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "eqrank/graph.hpp"
#include "eqrank/partition.hpp"

namespace eqrank {

/// Quotient of a graph by a partition. `graph` lives on block ids; an edge
/// X->Y exists iff some parent edge crosses from X to Y, weighted by the sum
/// of all such parent edges. Intra-block edges vanish.
struct FactorGraph {
  WeightedDigraph graph;
  Partition projection;
};

/// Same vertices, every edge reversed, weights carried along.
WeightedDigraph invert(const WeightedDigraph& g);

/// Keeps for each vertex only the outgoing edges of maximal weight. Ties are
/// all kept, including ties at weight 0.
WeightedDigraph max_links(const WeightedDigraph& g);

FactorGraph factor(const WeightedDigraph& g, const Partition& r);

/// Factor by the strong-connectivity relation. The result graph is acyclic.
FactorGraph condense_scc(const WeightedDigraph& g);

/// Strongly connected components, canonical block numbering.
Partition strong_components(const WeightedDigraph& g);

/// Vertices with out-degree 0, ascending.
std::vector<VertexId> sinks(const WeightedDigraph& g);

/// For each vertex of an acyclic graph, the set of sinks reachable from it
/// (a sink reaches itself). Sets are interned: vertices with equal root sets
/// share a set id.
class RootAssignment {
 public:
  std::size_t vertex_count() const { return set_of_.size(); }
  std::size_t distinct_sets() const { return sets_.size(); }
  std::uint32_t set_id(VertexId v) const { return set_of_[v]; }
  /// Sorted sink ids reachable from v.
  std::span<const VertexId> roots(VertexId v) const { return sets_[set_of_[v]]; }

 private:
  friend RootAssignment root_sets(const WeightedDigraph&);
  std::vector<std::uint32_t> set_of_;
  std::vector<std::vector<VertexId>> sets_;
};

/// Throws InvariantError if g has a cycle.
RootAssignment root_sets(const WeightedDigraph& g_acyclic);

/// Topological order of an acyclic graph (Kahn, smallest id first).
/// Throws InvariantError on a cycle.
std::vector<VertexId> topological_order(const WeightedDigraph& g);

/// x ~ y iff Root(Max(In(g))/SCR) agrees on their blocks.
Partition hub_relation(const WeightedDigraph& g);
/// x ~ y iff Root(Max(g)/SCR) agrees on their blocks.
Partition auth_relation(const WeightedDigraph& g);
/// hub_relation ∩ auth_relation.
Partition eqrank_relation(const WeightedDigraph& g);

/// Root members of every vertex of g: the vertices of g forming the sink
/// components reachable from v in Max(g)/SCR, sorted. Apply to invert(g)
/// for root hubs.
std::vector<std::vector<VertexId>> root_members(const WeightedDigraph& g);

/// Reference implementation of the recursive equivalence on an acyclic graph:
/// iterates the successor-set map Fe (sinks map to themselves) on vertex
/// subsets until it stabilizes and groups vertices by their limit set.
/// Limited to 64 vertices. Throws InputError on cycles or oversize input.
Partition eqrank_prime_oracle(const WeightedDigraph& g_acyclic);

/// One level G_i of the hierarchy. `projection` maps G_{i-1} vertices onto
/// this level's vertices and is empty for level 0.
struct Level {
  WeightedDigraph graph;
  Partition projection;
};

struct Hierarchy {
  std::vector<Level> levels;
  bool terminal = false;

  std::size_t depth() const { return levels.size(); }
  /// Block of every level-0 vertex at `level` (projections composed).
  Partition membership(std::size_t level) const;
  std::vector<std::size_t> level_sizes() const;
};

/// Called with (level index i, G_i, EqRank(G_i)); returns the partition that
/// is actually used to build G_{i+1}.
using LevelHook = std::function<Partition(std::size_t, const WeightedDigraph&, Partition)>;

/// G_0 = g, G_i = G_{i-1} / EqRank(G_{i-1}); stops when a factor step no longer
/// lowers the vertex count. The last stored level is the fixed point.
Hierarchy eqrank_hierarchy(const WeightedDigraph& g, const LevelHook& hook = {});

}  // namespace eqrank
