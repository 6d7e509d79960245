#include "eqrank/evaluation.hpp"

#include <algorithm>
#include <numeric>

namespace eqrank {

double CommunityWeights::index() const {
  const Weight total = inner + outer;
  return total > 0 ? inner / total : 1.0;
}

CommunityWeights community_weights(const WeightedDigraph& g, std::span<const VertexId> members) {
  std::vector<char> inside(g.vertex_count(), 0);
  for (VertexId v : members) {
    if (v >= g.vertex_count()) throw InputError("theme member out of range");
    inside[v] = 1;
  }
  CommunityWeights w;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!inside[v]) continue;
    auto succ = g.successors(v);
    auto weights = g.out_weights(v);
    for (std::size_t k = 0; k < succ.size(); ++k) {
      (inside[succ[k]] ? w.inner : w.outer) += weights[k];
    }
  }
  return w;
}

double community_index(const WeightedDigraph& g, std::span<const VertexId> members) {
  if (members.empty()) throw InputError("community index of an empty theme");
  return community_weights(g, members).index();
}

CommunityReport community_report(const WeightedDigraph& g,
                                 std::span<const std::vector<VertexId>> themes) {
  CommunityReport r;
  double weighted = 0;
  std::size_t total = 0;
  for (const auto& members : themes) {
    const double index = community_index(g, members);
    r.sizes.push_back(members.size());
    r.index.push_back(index);
    r.ideal.push_back(index > 0.5);
    r.ideal_count += index > 0.5;
    weighted += static_cast<double>(members.size()) * index;
    total += members.size();
  }
  r.weighted_mean = total > 0 ? weighted / static_cast<double>(total) : 0.0;
  return r;
}

std::string_view trend_symbol(Trend t) {
  switch (t) {
    case Trend::kGrowing: return "+";
    case Trend::kFading: return "-";
    case Trend::kStable: return "0";
    case Trend::kEmergent: return "++";
    case Trend::kUnclassified: return "?";
  }
  return "?";
}

double fit_slope(std::span<const std::size_t> counts) {
  const std::size_t k = counts.size();
  if (k < 2) return 0.0;
  const double x_mean = static_cast<double>(k - 1) / 2.0;
  double y_mean = 0;
  for (auto c : counts) y_mean += static_cast<double>(c);
  y_mean /= static_cast<double>(k);
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const double dx = static_cast<double>(i) - x_mean;
    sxy += dx * (static_cast<double>(counts[i]) - y_mean);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

TrendEntry classify_counts(std::vector<std::size_t> counts, int first_year,
                           const TrendConfig& cfg) {
  TrendEntry t;
  t.first_year = first_year;
  t.counts = std::move(counts);
  const auto years_with_data =
      std::count_if(t.counts.begin(), t.counts.end(), [](std::size_t c) { return c > 0; });
  if (years_with_data < 2) {
    t.warning = "fewer than two years with dated members; trend not classified";
    return t;
  }
  t.slope = fit_slope(t.counts);

  const std::size_t k = t.counts.size();
  const double prior_mean =
      static_cast<double>(std::accumulate(t.counts.begin(), t.counts.end() - 1, std::size_t{0})) /
      static_cast<double>(k - 1);
  if (static_cast<double>(t.counts.back()) > cfg.burst_factor * prior_mean) {
    t.trend = Trend::kEmergent;
    return t;
  }
  const double mean =
      static_cast<double>(std::accumulate(t.counts.begin(), t.counts.end(), std::size_t{0})) /
      static_cast<double>(k);
  const double epsilon = cfg.epsilon_fraction * mean;
  if (t.slope > epsilon) {
    t.trend = Trend::kGrowing;
  } else if (t.slope < -epsilon) {
    t.trend = Trend::kFading;
  } else {
    t.trend = Trend::kStable;
  }
  return t;
}

TrendEntry theme_dynamics(std::span<const VertexId> members, const MetaStore& meta,
                          const YearWindow& window, const TrendConfig& cfg) {
  if (window.last < window.first) throw InputError("trend window ends before it starts");
  std::vector<std::size_t> counts(static_cast<std::size_t>(window.last - window.first + 1), 0);
  for (VertexId v : members) {
    const DocumentMeta* m = meta.find(v);
    if (!m || m->year < window.first || m->year > window.last) continue;
    ++counts[static_cast<std::size_t>(m->year - window.first)];
  }
  return classify_counts(std::move(counts), window.first, cfg);
}

OverlapResult reference_overlap(std::span<const VertexId> members,
                                std::span<const std::string> external_ids,
                                const WeightedDigraph& g) {
  OverlapResult r;
  std::vector<VertexId> resolved;
  for (const std::string& id : external_ids) {
    std::optional<VertexId> v;
    if (g.ids()) {
      v = g.ids()->find(id);
    } else {
      for (VertexId u = 0; u < g.vertex_count() && !v; ++u) {
        if (g.name(u) == id) v = u;
      }
    }
    if (v) {
      resolved.push_back(*v);
    } else {
      r.unresolved.push_back(id);
    }
  }
  std::sort(resolved.begin(), resolved.end());
  resolved.erase(std::unique(resolved.begin(), resolved.end()), resolved.end());
  if (resolved.empty()) throw InputError("no external list entry resolves to a graph vertex");
  std::vector<VertexId> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  for (VertexId v : resolved) r.matched += std::binary_search(sorted.begin(), sorted.end(), v);
  r.resolved = resolved.size();
  r.overlap = static_cast<double>(r.matched) / static_cast<double>(r.resolved);
  return r;
}

double reference_overlap(std::span<const VertexId> members, std::span<const VertexId> external) {
  if (external.empty()) throw InputError("external list is empty");
  std::vector<VertexId> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<VertexId> ext(external.begin(), external.end());
  std::sort(ext.begin(), ext.end());
  ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
  std::size_t hits = 0;
  for (VertexId v : ext) hits += std::binary_search(sorted.begin(), sorted.end(), v);
  return static_cast<double>(hits) / static_cast<double>(ext.size());
}

}  // namespace eqrank
