#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eqrank/graph.hpp"
#include "eqrank/graph_io.hpp"

namespace eqrank {

struct RankEntry {
  std::string subject;
  std::optional<VertexId> paper;
  double authority_number = 0;
  double hub_number = 0;
};

/// Local authorities (Max(g)) and local hubs (Max(In(g))) of every vertex.
struct LocalMaps {
  WeightedDigraph authorities;
  WeightedDigraph hubs;

  static LocalMaps from_graph(const WeightedDigraph& g);
};

struct ThemeRanking {
  /// Sorted by decreasing authority number, ties by subject.
  std::vector<RankEntry> by_authority;
  /// Sorted by decreasing hub number, ties by subject.
  std::vector<RankEntry> by_hub;
};

/// Authority number of p: sum of W(p', p) over theme members p' having p as a
/// local authority. Hub number of p: sum of W(p, p') over members p' having
/// p as a local hub. Only theme members are ranked.
ThemeRanking rank_papers(std::span<const VertexId> members, const WeightedDigraph& g,
                         const LocalMaps& maps);

/// Author numbers are sums of paper numbers over the author's papers in the
/// theme; every co-author receives the full paper number.
ThemeRanking rank_authors(const ThemeRanking& papers, const MetaStore& meta);

/// First k entries of a ranked list.
std::vector<RankEntry> top(std::span<const RankEntry> ranked, std::size_t k = 10);

}  // namespace eqrank
