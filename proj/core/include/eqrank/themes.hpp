#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eqrank/eqrank.hpp"
#include "eqrank/graph.hpp"
#include "eqrank/partition.hpp"

namespace eqrank {

/// Minimal number of papers in an actual level-1 theme.
struct CutoffConfig {
  std::size_t f_cut = 20;

  void validate() const;
};

/// No block reaches the cutoff, so there is nothing to absorb into.
class CutoffTooHighError : public InputError {
 public:
  using InputError::InputError;
};

struct AbsorptionResult {
  Partition partition;
  /// Blocks of `partition` that had no link weight to any actual theme.
  std::vector<BlockId> orphans;
  std::size_t actual_themes = 0;
};

/// Blocks with at least f_cut members survive. Every smaller block joins the
/// surviving block with the largest total link weight to it, counted in both
/// directions; ties go to the smaller block id. Small blocks are compared
/// against the original survivors only. A small block with zero weight to all
/// survivors stays as an orphan. Throws CutoffTooHighError when nothing survives.
AbsorptionResult absorb_small_themes(const WeightedDigraph& g, const Partition& p,
                                     const CutoffConfig& cfg);

struct ThemeHierarchy {
  Hierarchy hierarchy;
  /// Level-1 blocks kept as orphans by absorption.
  std::vector<BlockId> orphans;
  std::size_t actual_themes = 0;

  /// Number of theme levels: levels past G_0, not counting a trailing fixed
  /// point graph unless it is the only one.
  std::size_t levels() const;
};

/// Level 1 is EqRank followed by absorption; later levels are the plain
/// EqRank iteration on factor graphs.
ThemeHierarchy build_theme_hierarchy(const WeightedDigraph& g, const CutoffConfig& cfg);

/// Result of clustering one weakly connected component.
struct ComponentClustering {
  enum class Status { kClustered, kBelowCutoff };

  /// Global vertex ids of the component, ascending; local id i is vertices[i].
  std::vector<VertexId> vertices;
  Status status = Status::kClustered;
  ThemeHierarchy result;
};

struct Clustering {
  std::size_t f_cut = 20;
  std::vector<ComponentClustering> components;

  std::size_t max_level() const;
};

/// Splits g into weakly connected components (largest first, ties by smallest
/// vertex) and clusters each one independently.
Clustering cluster_components(const WeightedDigraph& g, const CutoffConfig& cfg,
                              bool largest_only = false);

struct Theme {
  std::size_t level = 0;
  std::size_t component = 0;
  BlockId block = 0;
  /// 1-based rank within the level by decreasing size.
  std::size_t number = 0;
  bool orphan = false;
  /// Global level-0 vertex ids.
  std::vector<VertexId> members;
  /// Sinks reachable along maximal links in the parent level graph. For
  /// level 1 these are global paper ids; above that, component-local block
  /// ids of the parent level.
  std::vector<VertexId> root_hubs;
  std::vector<VertexId> root_authorities;
  /// "word word" pairs, filled in by labelling.
  std::vector<std::string> label;

  std::size_t size() const { return members.size(); }
};

/// Themes of every level >= 1, indexed [level - 1]. Numbering within a level
/// is by decreasing size, ties by (component, block).
std::vector<std::vector<Theme>> collect_themes(const Clustering& clustering);

}  // namespace eqrank
