#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eqrank/graph.hpp"

namespace eqrank {

enum class GraphFormat {
  /// `src<TAB>dst` per line (any run of blanks also accepted), `#` comments.
  kEdgeList,
  /// The normalized single-file format written by save_graph.
  kNormalized,
};

struct IngestReport {
  std::size_t lines = 0;
  std::size_t self_loops = 0;
  std::size_t duplicates = 0;
  std::vector<std::string> warnings;
};

/// Parses a graph. Edge (x, y) means "x cites y". Dense ids follow the first
/// appearance of external ids. Throws InputError("line N: ...") on bad input.
WeightedDigraph load_graph(std::istream& in, GraphFormat format, IngestReport* report = nullptr);
WeightedDigraph load_graph_file(const std::string& path, GraphFormat format,
                                IngestReport* report = nullptr);

/// Writes the normalized format:
///
///     # eqrank-graph 1
///     vertices<TAB>N
///     edges<TAB>M
///     v<TAB>dense_id<TAB>external_id      (N lines, dense id order)
///     e<TAB>src<TAB>dst<TAB>weight        (M lines, (src,dst) order)
///
/// Weights are printed with 17 significant digits so they round-trip exactly.
void save_graph(std::ostream& out, const WeightedDigraph& g);
void save_graph_file(const std::string& path, const WeightedDigraph& g);

/// Writes a plain `src<TAB>dst` edge list using external names.
void save_edge_list(std::ostream& out, const WeightedDigraph& g);

struct DocumentMeta {
  VertexId vertex = 0;
  std::string title;
  std::vector<std::string> authors;
  int year = 0;
  int month = 0;  // 0 when only the year is known
};

struct MetadataConfig {
  int min_year = 1950;
  int max_year = 2100;
};

/// Per-vertex metadata, indexed by dense vertex id.
class MetaStore {
 public:
  MetaStore() = default;
  explicit MetaStore(std::size_t vertex_count) : records_(vertex_count) {}

  void set(DocumentMeta meta);
  const DocumentMeta* find(VertexId v) const {
    return v < records_.size() && records_[v] ? &*records_[v] : nullptr;
  }
  std::size_t vertex_count() const { return records_.size(); }
  std::size_t record_count() const;
  /// Smallest and largest year among all records, if any.
  std::optional<std::pair<int, int>> year_span() const;

 private:
  std::vector<std::optional<DocumentMeta>> records_;
};

/// Collapses whitespace runs and puts a space after initials ("E.Witten" -> "E. Witten").
std::string normalize_author(std::string_view raw);

/// Parses `id<TAB>date<TAB>title<TAB>author1;author2;...` joined against g's id map.
/// Ids absent from the graph are reported as warnings and skipped.
MetaStore load_metadata(std::istream& in, const WeightedDigraph& g, const MetadataConfig& cfg = {},
                        std::vector<std::string>* warnings = nullptr);
MetaStore load_metadata_file(const std::string& path, const WeightedDigraph& g,
                             const MetadataConfig& cfg = {},
                             std::vector<std::string>* warnings = nullptr);

}  // namespace eqrank
