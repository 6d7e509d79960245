#include "eqrank/ranking.hpp"

#include <algorithm>
#include <map>

#include "eqrank/eqrank.hpp"

namespace eqrank {

LocalMaps LocalMaps::from_graph(const WeightedDigraph& g) {
  return {max_links(g), max_links(invert(g))};
}

namespace {

void sort_rankings(ThemeRanking& r) {
  auto by = [](double RankEntry::*field) {
    return [field](const RankEntry& a, const RankEntry& b) {
      if (a.*field != b.*field) return a.*field > b.*field;
      if (a.paper && b.paper) return *a.paper < *b.paper;
      return a.subject < b.subject;
    };
  };
  std::sort(r.by_authority.begin(), r.by_authority.end(), by(&RankEntry::authority_number));
  std::sort(r.by_hub.begin(), r.by_hub.end(), by(&RankEntry::hub_number));
}

}  // namespace

ThemeRanking rank_papers(std::span<const VertexId> members, const WeightedDigraph& g,
                         const LocalMaps& maps) {
  if (maps.authorities.vertex_count() != g.vertex_count() ||
      maps.hubs.vertex_count() != g.vertex_count()) {
    throw InvariantError("rank_papers: local maps do not match the graph");
  }
  std::vector<VertexId> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!sorted.empty() && sorted.back() >= g.vertex_count()) {
    throw InvariantError("rank_papers: member out of range");
  }
  auto index_of = [&](VertexId v) -> std::ptrdiff_t {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    return it != sorted.end() && *it == v ? it - sorted.begin() : -1;
  };
  std::vector<double> authority(sorted.size(), 0.0), hub(sorted.size(), 0.0);
  // Both maps keep the weights of g: authorities holds W(p', a) on p'->a,
  // hubs holds W(h, p') on p'->h.
  for (VertexId member : sorted) {
    auto auths = maps.authorities.successors(member);
    auto auth_w = maps.authorities.out_weights(member);
    for (std::size_t k = 0; k < auths.size(); ++k) {
      if (auto i = index_of(auths[k]); i >= 0) authority[i] += auth_w[k];
    }
    auto hubs = maps.hubs.successors(member);
    auto hub_w = maps.hubs.out_weights(member);
    for (std::size_t k = 0; k < hubs.size(); ++k) {
      if (auto i = index_of(hubs[k]); i >= 0) hub[i] += hub_w[k];
    }
  }
  ThemeRanking out;
  out.by_authority.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    out.by_authority.push_back(RankEntry{g.name(sorted[i]), sorted[i], authority[i], hub[i]});
  }
  out.by_hub = out.by_authority;
  sort_rankings(out);
  return out;
}

ThemeRanking rank_authors(const ThemeRanking& papers, const MetaStore& meta) {
  std::map<std::string, RankEntry> authors;
  for (const RankEntry& paper : papers.by_authority) {
    if (!paper.paper) continue;
    const DocumentMeta* m = meta.find(*paper.paper);
    if (!m) continue;
    for (const std::string& name : m->authors) {
      RankEntry& e = authors[name];
      e.subject = name;
      e.authority_number += paper.authority_number;
      e.hub_number += paper.hub_number;
    }
  }
  ThemeRanking out;
  for (auto& [name, entry] : authors) {
    out.by_authority.push_back(entry);
    out.by_hub.push_back(std::move(entry));
  }
  sort_rankings(out);
  return out;
}

std::vector<RankEntry> top(std::span<const RankEntry> ranked, std::size_t k) {
  return {ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(std::min(k, ranked.size()))};
}

}  // namespace eqrank
