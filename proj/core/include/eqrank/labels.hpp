#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "eqrank/graph_io.hpp"

namespace eqrank {

using StopList = std::unordered_set<std::string>;

/// English function words and prepositions.
StopList default_stop_list();
/// One word per line, `#` comments, case-folded.
StopList load_stop_list(std::istream& in);

/// Lowercased word tokens of a title with `$...$` spans, punctuation and stop
/// words removed. Inner '-', '/', '=', '+' and '\'' are kept ("pp-wave").
std::vector<std::string> tokenize_title(std::string_view title, const StopList& stop);

/// Consecutive surviving tokens as "first second" strings.
std::vector<std::string> title_pairs(std::string_view title, const StopList& stop);

/// Per-pair theme counts over all themes of one level.
class LabelCorpus {
 public:
  LabelCorpus(std::span<const std::vector<VertexId>> themes, const MetaStore& meta,
              const StopList& stop);

  std::size_t theme_count() const { return theme_count_; }
  std::size_t themes_containing(const std::string& pair) const;

 private:
  std::size_t theme_count_ = 0;
  std::map<std::string, std::size_t, std::less<>> document_frequency_;
};

struct ScoredPair {
  std::string pair;
  std::size_t frequency = 0;
  double score = 0;
};

/// Up to `max_pairs` title word pairs ranked by frequency * log(T / df), where
/// T is the number of themes in the corpus and df the themes containing the
/// pair. Ties fall back to frequency, then lexicographic order. Without a
/// corpus the theme is its own corpus (T = df = 1, ranking by frequency).
std::vector<ScoredPair> label_theme(std::span<const VertexId> members, const MetaStore& meta,
                                    const StopList& stop, const LabelCorpus* corpus = nullptr,
                                    std::size_t max_pairs = 7,
                                    std::vector<std::string>* warnings = nullptr);

}  // namespace eqrank
