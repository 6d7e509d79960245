#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eqrank/graph.hpp"
#include "eqrank/graph_io.hpp"

namespace eqrank {

struct CommunityWeights {
  Weight inner = 0;  // both endpoints in the theme
  Weight outer = 0;  // source in the theme, target outside

  /// inner / (inner + outer); 1 when the theme has no outgoing weight at all.
  double index() const;
  bool ideal() const { return index() > 0.5; }
};

CommunityWeights community_weights(const WeightedDigraph& g, std::span<const VertexId> members);
/// Throws InputError for an empty member set.
double community_index(const WeightedDigraph& g, std::span<const VertexId> members);

struct CommunityReport {
  std::vector<std::size_t> sizes;
  std::vector<double> index;
  std::vector<bool> ideal;
  std::size_t ideal_count = 0;
  /// sum(size * index) / sum(size)
  double weighted_mean = 0;
};

CommunityReport community_report(const WeightedDigraph& g,
                                 std::span<const std::vector<VertexId>> themes);

enum class Trend { kGrowing, kFading, kStable, kEmergent, kUnclassified };

/// "+", "-", "0", "++", "?"
std::string_view trend_symbol(Trend t);

struct TrendConfig {
  /// Slope threshold as a fraction of the mean yearly count.
  double epsilon_fraction = 0.05;
  /// Final year above burst_factor * mean of earlier years is "++".
  double burst_factor = 2.0;
};

struct YearWindow {
  int first = 0;
  int last = 0;
};

struct TrendEntry {
  int first_year = 0;
  std::vector<std::size_t> counts;
  double slope = 0;
  Trend trend = Trend::kUnclassified;
  std::string warning;
};

/// Least-squares slope of counts against their index.
double fit_slope(std::span<const std::size_t> counts);

/// Classifies a yearly count series starting at `first_year`.
TrendEntry classify_counts(std::vector<std::size_t> counts, int first_year, const TrendConfig& cfg);

/// Yearly counts of dated members inside `window` and their trend class.
TrendEntry theme_dynamics(std::span<const VertexId> members, const MetaStore& meta,
                          const YearWindow& window, const TrendConfig& cfg = {});

struct OverlapResult {
  double overlap = 0;
  std::size_t matched = 0;
  std::size_t resolved = 0;
  std::vector<std::string> unresolved;
};

/// |external ∩ members| / |external| over resolvable external ids.
/// Throws InputError when no external id resolves.
OverlapResult reference_overlap(std::span<const VertexId> members,
                                std::span<const std::string> external_ids,
                                const WeightedDigraph& g);
double reference_overlap(std::span<const VertexId> members, std::span<const VertexId> external);

}  // namespace eqrank
