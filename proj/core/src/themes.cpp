#include "eqrank/themes.hpp"

#include <algorithm>
#include <map>

#include "eqrank/weights.hpp"

namespace eqrank {

void CutoffConfig::validate() const {
  if (f_cut < 1) throw InputError("f_cut must be at least 1");
}

AbsorptionResult absorb_small_themes(const WeightedDigraph& g, const Partition& p,
                                     const CutoffConfig& cfg) {
  cfg.validate();
  if (p.vertex_count() != g.vertex_count()) {
    throw InvariantError("absorb_small_themes: partition does not match graph");
  }
  const std::size_t k = p.block_count();
  std::vector<char> actual(k, 0);
  std::size_t actual_count = 0;
  for (BlockId b = 0; b < k; ++b) {
    actual[b] = p.block_size(b) >= cfg.f_cut;
    actual_count += actual[b];
  }
  if (actual_count == 0) {
    throw CutoffTooHighError("no theme has at least " + std::to_string(cfg.f_cut) +
                             " members; lower the cutoff");
  }

  // closeness[small][actual], links counted regardless of direction.
  std::vector<std::map<BlockId, Weight>> closeness(k);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const BlockId x = p.block_of(g.edge_source(e));
    const BlockId y = p.block_of(g.edge_target(e));
    if (x == y || actual[x] == actual[y]) continue;
    if (actual[y]) {
      closeness[x][y] += g.edge_weight(e);
    } else {
      closeness[y][x] += g.edge_weight(e);
    }
  }

  std::vector<std::uint64_t> target(k);
  std::vector<char> orphan(k, 0);
  for (BlockId b = 0; b < k; ++b) {
    target[b] = b;
    if (actual[b]) continue;
    Weight best = 0;
    for (const auto& [candidate, w] : closeness[b]) {
      // Ascending map order: strict '>' keeps the smaller block id on ties.
      if (w > best) {
        best = w;
        target[b] = candidate;
      }
    }
    orphan[b] = best == 0;
  }

  std::vector<std::uint64_t> labels(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) labels[v] = target[p.block_of(v)];
  AbsorptionResult out{Partition::from_labels(labels), {}, actual_count};
  for (BlockId b = 0; b < k; ++b) {
    if (orphan[b]) out.orphans.push_back(out.partition.block_of(p.members(b).front()));
  }
  std::sort(out.orphans.begin(), out.orphans.end());
  return out;
}

std::size_t ThemeHierarchy::levels() const {
  const std::size_t stored = hierarchy.levels.size();
  if (stored <= 1) return 0;
  return std::max<std::size_t>(1, stored - 2);
}

ThemeHierarchy build_theme_hierarchy(const WeightedDigraph& g, const CutoffConfig& cfg) {
  cfg.validate();
  ThemeHierarchy out;
  out.hierarchy = eqrank_hierarchy(g, [&](std::size_t level, const WeightedDigraph& current,
                                          Partition p) {
    if (level != 0) return p;
    AbsorptionResult absorbed = absorb_small_themes(current, p, cfg);
    out.orphans = std::move(absorbed.orphans);
    out.actual_themes = absorbed.actual_themes;
    return std::move(absorbed.partition);
  });
  return out;
}

std::size_t Clustering::max_level() const {
  std::size_t level = 0;
  for (const auto& c : components) {
    level = std::max(level, c.result.hierarchy.levels.size() - 1);
  }
  return level;
}

Clustering cluster_components(const WeightedDigraph& g, const CutoffConfig& cfg,
                              bool largest_only) {
  cfg.validate();
  Partition wcc = weakly_connected_components(g);
  std::vector<BlockId> order(wcc.block_count());
  for (BlockId b = 0; b < order.size(); ++b) order[b] = b;
  // Canonical numbering already orders equal sizes by smallest vertex.
  std::stable_sort(order.begin(), order.end(),
                   [&](BlockId a, BlockId b) { return wcc.block_size(a) > wcc.block_size(b); });
  if (largest_only && !order.empty()) order.resize(1);

  Clustering out;
  out.f_cut = cfg.f_cut;
  for (BlockId b : order) {
    ComponentClustering c;
    auto members = wcc.members(b);
    c.vertices.assign(members.begin(), members.end());
    WeightedDigraph sub = induced_subgraph(g, c.vertices);
    try {
      c.result = build_theme_hierarchy(sub, cfg);
    } catch (const CutoffTooHighError&) {
      c.status = ComponentClustering::Status::kBelowCutoff;
      c.result = ThemeHierarchy{};
      c.result.hierarchy.levels.push_back({std::move(sub), Partition{}});
      c.result.hierarchy.terminal = true;
    }
    out.components.push_back(std::move(c));
  }
  return out;
}

std::vector<std::vector<Theme>> collect_themes(const Clustering& clustering) {
  std::vector<std::vector<Theme>> levels(clustering.max_level());
  for (std::size_t ci = 0; ci < clustering.components.size(); ++ci) {
    const ComponentClustering& comp = clustering.components[ci];
    const Hierarchy& h = comp.result.hierarchy;
    if (h.levels.front().graph.vertex_count() != comp.vertices.size()) {
      throw InvariantError("component hierarchy does not match its vertex list");
    }
    for (std::size_t level = 1; level < h.levels.size(); ++level) {
      const WeightedDigraph& parent = h.levels[level - 1].graph;
      const Partition& projection = h.levels[level].projection;
      const Partition membership = h.membership(level);
      const auto auth_roots = root_members(parent);
      const auto hub_roots = root_members(invert(parent));
      for (BlockId b = 0; b < projection.block_count(); ++b) {
        Theme t;
        t.level = level;
        t.component = ci;
        t.block = b;
        t.orphan = level == 1 && std::binary_search(comp.result.orphans.begin(),
                                                    comp.result.orphans.end(), b);
        for (VertexId local : membership.members(b)) t.members.push_back(comp.vertices[local]);
        for (VertexId x : projection.members(b)) {
          t.root_authorities.insert(t.root_authorities.end(), auth_roots[x].begin(),
                                    auth_roots[x].end());
          t.root_hubs.insert(t.root_hubs.end(), hub_roots[x].begin(), hub_roots[x].end());
        }
        for (auto* roots : {&t.root_authorities, &t.root_hubs}) {
          if (level == 1) {
            for (VertexId& r : *roots) r = comp.vertices[r];
          }
          std::sort(roots->begin(), roots->end());
          roots->erase(std::unique(roots->begin(), roots->end()), roots->end());
        }
        levels[level - 1].push_back(std::move(t));
      }
    }
  }
  for (auto& themes : levels) {
    std::stable_sort(themes.begin(), themes.end(), [](const Theme& a, const Theme& b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return a.component != b.component ? a.component < b.component : a.block < b.block;
    });
    for (std::size_t i = 0; i < themes.size(); ++i) themes[i].number = i + 1;
  }
  return levels;
}

}  // namespace eqrank
