#include "eqrank/eqrank.hpp"

namespace eqrank {

Partition Hierarchy::membership(std::size_t level) const {
  if (level >= levels.size()) throw InvariantError("hierarchy level out of range");
  Partition p = Partition::singletons(levels.front().graph.vertex_count());
  for (std::size_t i = 1; i <= level; ++i) p = p.compose(levels[i].projection);
  return p;
}

std::vector<std::size_t> Hierarchy::level_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(levels.size());
  for (const Level& l : levels) sizes.push_back(l.graph.vertex_count());
  return sizes;
}

Hierarchy eqrank_hierarchy(const WeightedDigraph& g, const LevelHook& hook) {
  Hierarchy h;
  h.levels.push_back({g, Partition{}});
  for (std::size_t i = 0;; ++i) {
    const WeightedDigraph& current = h.levels.back().graph;
    Partition p = eqrank_relation(current);
    if (hook) {
      p = hook(i, current, std::move(p));
      if (p.vertex_count() != current.vertex_count()) {
        throw InvariantError("level hook returned a partition of the wrong size");
      }
    }
    if (p.block_count() == current.vertex_count()) break;
    FactorGraph next = factor(current, p);
    h.levels.push_back({std::move(next.graph), std::move(next.projection)});
  }
  h.terminal = true;
  return h;
}

}  // namespace eqrank
