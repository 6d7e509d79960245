#include "eqrank/labels.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <set>

namespace eqrank {

StopList default_stop_list() {
  static const char* const kWords[] = {
      "a",       "about",   "above",  "after",   "against", "all",     "along",   "also",
      "among",   "an",      "and",    "any",     "are",     "around",  "as",      "at",
      "be",      "been",    "before", "behind",  "being",   "below",   "beneath", "beside",
      "besides", "between", "beyond", "both",    "but",     "by",      "can",     "do",
      "does",    "down",    "due",    "during",  "each",    "either",  "et",      "except",
      "for",     "from",    "has",    "have",    "how",     "i",       "ii",      "iii",
      "in",      "inside",  "into",   "is",      "it",      "its",     "near",    "new",
      "no",      "non",     "not",    "of",      "off",     "on",      "one",     "onto",
      "or",      "our",     "out",    "outside", "over",    "per",     "some",    "such",
      "than",    "that",    "the",    "their",   "them",    "then",    "there",   "these",
      "they",    "this",    "those",  "through", "to",      "toward",  "towards", "two",
      "under",   "unto",    "up",     "upon",    "using",   "via",     "vs",      "was",
      "we",      "were",    "what",   "when",    "where",   "which",   "while",   "who",
      "why",     "will",    "with",   "within",  "without", "yet",
  };
  return StopList(std::begin(kWords), std::end(kWords));
}

StopList load_stop_list(std::istream& in) {
  StopList out;
  std::string line;
  while (std::getline(in, line)) {
    std::string word;
    for (char c : line) {
      if (c == '#') break;
      if (!std::isspace(static_cast<unsigned char>(c))) {
        word.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      }
    }
    if (!word.empty()) out.insert(std::move(word));
  }
  return out;
}

namespace {

bool inner_mark(char c) { return c == '-' || c == '/' || c == '=' || c == '+' || c == '\''; }

}  // namespace

std::vector<std::string> tokenize_title(std::string_view title, const StopList& stop) {
  std::string text;
  text.reserve(title.size());
  bool in_math = false;
  for (char c : title) {
    if (c == '$') {
      in_math = !in_math;
      text.push_back(' ');
      continue;
    }
    if (in_math) continue;
    auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || inner_mark(c)) {
      text.push_back(static_cast<char>(std::tolower(u)));
    } else {
      text.push_back(' ');
    }
  }

  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ') ++i;
    std::string_view word(text.data() + start, i - start);
    while (!word.empty() && inner_mark(word.front())) word.remove_prefix(1);
    while (!word.empty() && inner_mark(word.back())) word.remove_suffix(1);
    if (word.empty()) continue;
    std::string token(word);
    if (stop.count(token)) continue;
    tokens.push_back(std::move(token));
  }
  return tokens;
}

std::vector<std::string> title_pairs(std::string_view title, const StopList& stop) {
  auto tokens = tokenize_title(title, stop);
  std::vector<std::string> pairs;
  for (std::size_t i = 1; i < tokens.size(); ++i) pairs.push_back(tokens[i - 1] + ' ' + tokens[i]);
  return pairs;
}

LabelCorpus::LabelCorpus(std::span<const std::vector<VertexId>> themes, const MetaStore& meta,
                         const StopList& stop)
    : theme_count_(themes.size()) {
  for (const auto& members : themes) {
    std::set<std::string> seen;
    for (VertexId v : members) {
      if (const DocumentMeta* m = meta.find(v)) {
        for (auto& p : title_pairs(m->title, stop)) seen.insert(std::move(p));
      }
    }
    for (const auto& p : seen) ++document_frequency_[p];
  }
}

std::size_t LabelCorpus::themes_containing(const std::string& pair) const {
  auto it = document_frequency_.find(pair);
  return it == document_frequency_.end() ? 0 : it->second;
}

std::vector<ScoredPair> label_theme(std::span<const VertexId> members, const MetaStore& meta,
                                    const StopList& stop, const LabelCorpus* corpus,
                                    std::size_t max_pairs, std::vector<std::string>* warnings) {
  std::map<std::string, std::size_t> frequency;
  bool any_title = false;
  for (VertexId v : members) {
    const DocumentMeta* m = meta.find(v);
    if (!m || m->title.empty()) continue;
    any_title = true;
    for (auto& p : title_pairs(m->title, stop)) ++frequency[std::move(p)];
  }
  if (!any_title) {
    if (warnings) warnings->push_back("no titles available; label left empty");
    return {};
  }

  std::vector<ScoredPair> scored;
  scored.reserve(frequency.size());
  for (const auto& [pair, count] : frequency) {
    double idf = 0;
    if (corpus) {
      const auto themes = static_cast<double>(corpus->theme_count());
      const auto containing = static_cast<double>(std::max<std::size_t>(1, corpus->themes_containing(pair)));
      idf = std::log(std::max(themes, containing) / containing);
    }
    scored.push_back({pair, count, static_cast<double>(count) * idf});
  }
  std::sort(scored.begin(), scored.end(), [](const ScoredPair& a, const ScoredPair& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return a.pair < b.pair;
  });
  if (scored.size() > max_pairs) scored.resize(max_pairs);
  return scored;
}

}  // namespace eqrank
