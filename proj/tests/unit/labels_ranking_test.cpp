#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "eqrank/eqrank.hpp"
#include "eqrank/labels.hpp"
#include "eqrank/ranking.hpp"
#include "oracles.hpp"

namespace eqrank {
namespace {

using testing::graph_of;

MetaStore titles(const std::vector<std::string>& t) {
  MetaStore meta(t.size());
  for (VertexId v = 0; v < t.size(); ++v) meta.set({v, t[v], {}, 2000, 0});
  return meta;
}

TEST(Tokenize, DropsMathPunctuationAndStopWords) {
  auto stop = default_stop_list();
  EXPECT_EQ(tokenize_title("Tachyon Condensation in $N=2$ String-Field Theory!", stop),
            (std::vector<std::string>{"tachyon", "condensation", "string-field", "theory"}));
  EXPECT_EQ(tokenize_title("The AdS/CFT correspondence: a review", stop),
            (std::vector<std::string>{"ads/cft", "correspondence", "review"}));
  EXPECT_EQ(title_pairs("Rolling tachyon", stop), (std::vector<std::string>{"rolling tachyon"}));
}

TEST(StopList, LoadsFromStream) {
  std::istringstream in("# comment\nThe\n  of \n\n");
  auto stop = load_stop_list(in);
  EXPECT_EQ(stop.size(), 2u);
  EXPECT_TRUE(stop.count("the"));
}

TEST(Label, FrequentUniquePairRanksFirst) {
  std::vector<std::string> t;
  const std::vector<std::string> words{"branes", "strings", "vacua", "solitons", "orientifolds",
                                       "fluxes", "instantons", "monopoles", "orbifolds", "gauge"};
  for (const auto& w : words) t.push_back("Tachyon condensation and " + w);
  for (const auto& w : words) t.push_back("Black hole entropy from " + w);
  auto meta = titles(t);
  std::vector<std::vector<VertexId>> themes(2);
  for (VertexId v = 0; v < 20; ++v) themes[v / 10].push_back(v);
  auto stop = default_stop_list();
  LabelCorpus corpus(themes, meta, stop);
  auto label = label_theme(themes[0], meta, stop, &corpus);
  ASSERT_FALSE(label.empty());
  EXPECT_LE(label.size(), 7u);
  EXPECT_EQ(label.front().pair, "tachyon condensation");
  EXPECT_EQ(label.front().frequency, 10u);
}

TEST(Label, UbiquitousPairRanksBelowSpecificOnes) {
  // "string theory" appears equally often in both themes; the specific pair
  // is rarer inside its own theme but still wins on predicativity.
  std::vector<std::string> t = {
      "String theory of rolling tachyon", "String theory remarks", "String theory notes",
      "String theory of random matrix", "String theory again", "String theory once more"};
  auto meta = titles(t);
  std::vector<std::vector<VertexId>> themes{{0, 1, 2}, {3, 4, 5}};
  auto stop = default_stop_list();
  LabelCorpus corpus(themes, meta, stop);
  auto label = label_theme(themes[0], meta, stop, &corpus);
  ASSERT_GE(label.size(), 2u);
  EXPECT_NE(label.front().pair, "string theory");
  EXPECT_EQ(corpus.themes_containing("string theory"), 2u);
  auto pos = std::find_if(label.begin(), label.end(), [](auto& s) { return s.pair == "string theory"; });
  ASSERT_NE(pos, label.end());
  EXPECT_EQ(pos->score, 0.0);
}

TEST(Label, PairsAreVerbatimAndStopFree) {
  std::vector<std::string> t = {"On the geometry of the moduli space of instantons",
                                "Moduli space of vacua in gauge theories",
                                "Geometry of moduli space and dualities"};
  auto meta = titles(t);
  auto stop = default_stop_list();
  std::vector<VertexId> members{0, 1, 2};
  auto label = label_theme(members, meta, stop);
  EXPECT_EQ(label.front().pair, "moduli space");
  for (const auto& s : label) {
    auto space = s.pair.find(' ');
    ASSERT_NE(space, std::string::npos);
    EXPECT_FALSE(stop.count(s.pair.substr(0, space)));
    EXPECT_FALSE(stop.count(s.pair.substr(space + 1)));
    bool found = false;
    for (const auto& title : t) {
      for (const auto& p : title_pairs(title, stop)) found |= p == s.pair;
    }
    EXPECT_TRUE(found) << s.pair;
  }
}

TEST(Label, NoTitlesGivesEmptyLabelAndWarning) {
  MetaStore meta(2);
  std::vector<std::string> warnings;
  std::vector<VertexId> members{0, 1};
  EXPECT_TRUE(label_theme(members, meta, default_stop_list(), nullptr, 7, &warnings).empty());
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(Label, AtMostSevenPairs) {
  auto meta = titles({"alpha beta gamma delta epsilon zeta eta theta iota kappa lambda"});
  std::vector<VertexId> members{0};
  EXPECT_EQ(label_theme(members, meta, default_stop_list()).size(), 7u);
}

TEST(RankPapers, UniqueLocalAuthoritySumsWeights) {
  auto g = graph_of(4, {{1, 0, 1}, {2, 0, 2}, {3, 0, 3}});
  std::vector<VertexId> members{0, 1, 2, 3};
  auto r = rank_papers(members, g, LocalMaps::from_graph(g));
  EXPECT_EQ(r.by_authority.front().paper, 0u);
  EXPECT_EQ(r.by_authority.front().authority_number, 6.0);
}

TEST(RankPapers, IsolatedPaperScoresZero) {
  auto g = graph_of(1, {});
  std::vector<VertexId> members{0};
  auto r = rank_papers(members, g, LocalMaps::from_graph(g));
  ASSERT_EQ(r.by_authority.size(), 1u);
  EXPECT_EQ(r.by_authority[0].authority_number, 0.0);
  EXPECT_EQ(r.by_authority[0].hub_number, 0.0);
}

// Eight-paper fixture; theme is papers 0..6. Expected numbers from a Python
// script summing weights over hand-listed local authority/hub maps.
WeightedDigraph eight_vertex_fixture() {
  return graph_of(8, {{1, 0, 2}, {2, 0, 3}, {2, 1, 3}, {3, 1, 1}, {3, 0, 0.5}, {4, 2, 4},
                      {5, 2, 1}, {5, 3, 2}, {6, 4, 1.5}, {7, 4, 5}, {7, 6, 1}, {6, 5, 1.5}});
}

TEST(RankPapers, EightVertexFixture) {
  auto g = eight_vertex_fixture();
  std::vector<VertexId> members{0, 1, 2, 3, 4, 5, 6};
  auto r = rank_papers(members, g, LocalMaps::from_graph(g));
  std::map<VertexId, std::pair<double, double>> got;
  for (const auto& e : r.by_authority) got[*e.paper] = {e.authority_number, e.hub_number};
  const std::map<VertexId, std::pair<double, double>> expected{
      {0, {5.0, 0.0}}, {1, {4.0, 0.0}}, {2, {4.0, 6.0}}, {3, {2.0, 0.0}},
      {4, {1.5, 4.0}}, {5, {1.5, 2.0}}, {6, {0.0, 1.5}}};
  EXPECT_EQ(got, expected);
  std::vector<VertexId> order;
  for (const auto& e : r.by_authority) order.push_back(*e.paper);
  EXPECT_EQ(order, (std::vector<VertexId>{0, 1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(*r.by_hub.front().paper, 2u);
}

TEST(RankPapers, AuthorityNumbersConserveThemeMaxLinkWeight) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = testing::random_digraph(rng, 20, 0.2, false);
    std::vector<VertexId> members;
    for (VertexId v = 0; v < 20; ++v) {
      if (rng() % 3) members.push_back(v);
    }
    auto maps = LocalMaps::from_graph(g);
    auto r = rank_papers(members, g, maps);
    double total = 0;
    for (const auto& e : r.by_authority) total += e.authority_number;
    std::set<VertexId> in(members.begin(), members.end());
    double direct = 0;
    for (const Edge& e : maps.authorities.edges()) {
      if (in.count(e.src) && in.count(e.dst)) direct += e.weight;
    }
    EXPECT_DOUBLE_EQ(total, direct);
  }
}

TEST(RankPapers, InvertedGraphSwapsRoles) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = testing::random_digraph(rng, 15, 0.25, false);
    std::vector<VertexId> members{0, 2, 3, 5, 7, 8, 11, 14};
    auto maps = LocalMaps::from_graph(g);
    auto r = rank_papers(members, g, maps);
    auto inv = invert(g);
    auto swapped = rank_papers(members, inv, LocalMaps{maps.hubs, maps.authorities});
    std::map<VertexId, double> hub, auth_of_inverted;
    for (const auto& e : r.by_hub) hub[*e.paper] = e.hub_number;
    for (const auto& e : swapped.by_authority) auth_of_inverted[*e.paper] = e.authority_number;
    EXPECT_EQ(hub, auth_of_inverted);
  }
}

TEST(RankAuthors, SoleAuthorGetsEverything) {
  auto g = graph_of(4, {{1, 0, 1}, {2, 0, 2}, {3, 0, 3}});
  MetaStore meta(4);
  for (VertexId v = 0; v < 4; ++v) meta.set({v, "t", {"Solo"}, 2000, 0});
  std::vector<VertexId> members{0, 1, 2, 3};
  auto papers = rank_papers(members, g, LocalMaps::from_graph(g));
  auto authors = rank_authors(papers, meta);
  ASSERT_EQ(authors.by_authority.size(), 1u);
  EXPECT_EQ(authors.by_authority[0].authority_number, 6.0);
  // Paper 0's only local hub is 3, the heaviest citer.
  EXPECT_EQ(authors.by_authority[0].hub_number, 3.0);
}

TEST(RankAuthors, ThreeAuthorFixture) {
  auto g = eight_vertex_fixture();
  const std::vector<std::vector<std::string>> by_paper{{"A"}, {"A", "B"}, {"B"}, {"C"},
                                                       {"A", "C"}, {"B"}, {"C"}, {"A"}};
  MetaStore meta(8);
  for (VertexId v = 0; v < 8; ++v) meta.set({v, "t", by_paper[v], 2000, 0});
  std::vector<VertexId> members{0, 1, 2, 3, 4, 5, 6};
  auto authors = rank_authors(rank_papers(members, g, LocalMaps::from_graph(g)), meta);
  std::map<std::string, std::pair<double, double>> got;
  for (const auto& e : authors.by_authority) got[e.subject] = {e.authority_number, e.hub_number};
  const std::map<std::string, std::pair<double, double>> expected{
      {"A", {10.5, 4.0}}, {"B", {9.5, 8.0}}, {"C", {3.5, 5.5}}};
  EXPECT_EQ(got, expected);
  EXPECT_EQ(authors.by_authority.front().subject, "A");
  EXPECT_EQ(authors.by_hub.front().subject, "B");
  EXPECT_EQ(top(authors.by_hub, 2).size(), 2u);
}

}  // namespace
}  // namespace eqrank
