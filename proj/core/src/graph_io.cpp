#include "eqrank/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

namespace eqrank {
namespace {

std::string_view trim(std::string_view s) {
  auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::string_view> split_blanks(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

template <typename T>
T parse_number(std::string_view text, std::size_t line, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(line, std::string("bad ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

double parse_weight(std::string_view text, std::size_t line) {
  // from_chars for double is unavailable on older libstdc++; strtod is exact
  // for the 17-digit output of save_graph.
  std::string buf(text);
  char* end = nullptr;
  double w = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size()) fail(line, "bad weight '" + buf + "'");
  return w;
}

WeightedDigraph load_edge_list(std::istream& in, IngestReport& report) {
  GraphBuilder builder;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    std::vector<std::string_view> fields;
    if (text.find('\t') != std::string_view::npos) {
      for (auto f : split(text, '\t')) fields.push_back(trim(f));
    } else {
      fields = split_blanks(text);
    }
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      fail(line, "expected 'src<TAB>dst'");
    }
    builder.add_edge(fields[0], fields[1]);
  }
  report.lines = line;
  NormalizationReport norm;
  WeightedDigraph g = builder.build(&norm);
  report.self_loops = norm.self_loops;
  report.duplicates = norm.duplicates;
  if (norm.self_loops > 0) {
    report.warnings.push_back("dropped " + std::to_string(norm.self_loops) + " self-loop(s)");
  }
  if (norm.duplicates > 0) {
    report.warnings.push_back("collapsed " + std::to_string(norm.duplicates) +
                              " duplicate edge(s)");
  }
  return g;
}

WeightedDigraph load_normalized(std::istream& in, IngestReport& report) {
  std::string raw;
  std::size_t line = 0;
  auto next = [&]() -> std::optional<std::string_view> {
    while (std::getline(in, raw)) {
      ++line;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (!raw.empty()) return std::string_view(raw);
    }
    return std::nullopt;
  };

  auto header = next();
  if (!header || *header != "# eqrank-graph 1") fail(line, "missing '# eqrank-graph 1' header");

  auto count_line = [&](std::string_view key) {
    auto text = next();
    if (!text) fail(line, "unexpected end of file");
    auto f = split(*text, '\t');
    if (f.size() != 2 || f[0] != key) fail(line, "expected '" + std::string(key) + "<TAB>N'");
    return parse_number<std::size_t>(f[1], line, "count");
  };
  const std::size_t n = count_line("vertices");
  const std::size_t m = count_line("edges");

  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto text = next();
    if (!text) fail(line, "unexpected end of file in vertex section");
    auto f = split(*text, '\t');
    if (f.size() != 3 || f[0] != "v") fail(line, "expected 'v<TAB>id<TAB>name'");
    if (parse_number<std::size_t>(f[1], line, "vertex id") != i) {
      fail(line, "vertex ids must be listed densely in order");
    }
    names.emplace_back(f[2]);
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto text = next();
    if (!text) fail(line, "unexpected end of file in edge section");
    auto f = split(*text, '\t');
    if (f.size() != 4 || f[0] != "e") fail(line, "expected 'e<TAB>src<TAB>dst<TAB>weight'");
    Edge e{parse_number<VertexId>(f[1], line, "source"), parse_number<VertexId>(f[2], line, "target"),
           parse_weight(f[3], line)};
    if (e.src >= n || e.dst >= n) fail(line, "edge endpoint out of range");
    edges.push_back(e);
  }
  if (next()) fail(line, "trailing content after edge section");
  report.lines = line;
  try {
    return WeightedDigraph(n, std::move(edges), IdMap(std::move(names)));
  } catch (const InvariantError& e) {
    throw InputError(std::string("normalized graph is not normalized: ") + e.what());
  }
}

}  // namespace

WeightedDigraph load_graph(std::istream& in, GraphFormat format, IngestReport* report) {
  IngestReport local;
  WeightedDigraph g = format == GraphFormat::kEdgeList ? load_edge_list(in, local)
                                                        : load_normalized(in, local);
  if (report) *report = std::move(local);
  return g;
}

WeightedDigraph load_graph_file(const std::string& path, GraphFormat format,
                                IngestReport* report) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return load_graph(in, format, report);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void save_graph(std::ostream& out, const WeightedDigraph& g) {
  out << "# eqrank-graph 1\n";
  out << "vertices\t" << g.vertex_count() << '\n';
  out << "edges\t" << g.edge_count() << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "v\t" << v << '\t' << g.name(v) << '\n';
  }
  char buf[64];
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    std::snprintf(buf, sizeof buf, "%.17g", g.edge_weight(e));
    out << "e\t" << g.edge_source(e) << '\t' << g.edge_target(e) << '\t' << buf << '\n';
  }
}

void save_graph_file(const std::string& path, const WeightedDigraph& g) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  save_graph(out, g);
}

void save_edge_list(std::ostream& out, const WeightedDigraph& g) {
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    out << g.name(g.edge_source(e)) << '\t' << g.name(g.edge_target(e)) << '\n';
  }
}

void MetaStore::set(DocumentMeta meta) {
  if (meta.vertex >= records_.size()) throw InvariantError("metadata vertex out of range");
  records_[meta.vertex] = std::move(meta);
}

std::size_t MetaStore::record_count() const {
  std::size_t n = 0;
  for (const auto& r : records_) n += r.has_value();
  return n;
}

std::optional<std::pair<int, int>> MetaStore::year_span() const {
  std::optional<std::pair<int, int>> span;
  for (const auto& r : records_) {
    if (!r) continue;
    if (!span) {
      span.emplace(r->year, r->year);
    } else {
      span->first = std::min(span->first, r->year);
      span->second = std::max(span->second, r->year);
    }
  }
  return span;
}

std::string normalize_author(std::string_view raw) {
  std::string out;
  for (char c : trim(raw)) {
    bool blank = c == ' ' || c == '\t';
    if (blank) {
      if (!out.empty() && out.back() != ' ') out.push_back(' ');
      continue;
    }
    if (!out.empty() && out.back() == '.' && c != '.' && c != '-') out.push_back(' ');
    out.push_back(c);
  }
  return out;
}

MetaStore load_metadata(std::istream& in, const WeightedDigraph& g, const MetadataConfig& cfg,
                        std::vector<std::string>* warnings) {
  if (!g.ids()) throw InputError("metadata requires a graph with external ids");
  MetaStore store(g.vertex_count());
  std::vector<std::string> local_warnings;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string_view text = raw;
    if (trim(text).empty() || trim(text).front() == '#') continue;
    auto f = split(text, '\t');
    if (f.size() < 3 || f.size() > 4) fail(line, "expected 'id<TAB>date<TAB>title<TAB>authors'");
    auto id = trim(f[0]);
    auto date = trim(f[1]);
    if (id.empty()) fail(line, "empty id");

    DocumentMeta meta;
    auto parts = split(date, '-');
    if (parts.empty() || parts.size() > 3 || parts[0].size() != 4) {
      fail(line, "bad date '" + std::string(date) + "' (want YYYY or YYYY-MM)");
    }
    meta.year = parse_number<int>(parts[0], line, "year");
    if (parts.size() >= 2) {
      meta.month = parse_number<int>(parts[1], line, "month");
      if (meta.month < 1 || meta.month > 12) fail(line, "month out of range");
    }
    if (meta.year < cfg.min_year || meta.year > cfg.max_year) {
      fail(line, "year " + std::to_string(meta.year) + " outside [" +
                     std::to_string(cfg.min_year) + ", " + std::to_string(cfg.max_year) + "]");
    }
    meta.title = std::string(trim(f[2]));
    if (f.size() == 4) {
      for (auto a : split(f[3], ';')) {
        std::string name = normalize_author(a);
        if (!name.empty()) meta.authors.push_back(std::move(name));
      }
    }

    auto v = g.ids()->find(id);
    if (!v) {
      local_warnings.push_back("line " + std::to_string(line) + ": id '" + std::string(id) +
                               "' not in graph");
      continue;
    }
    meta.vertex = *v;
    if (store.find(*v)) {
      local_warnings.push_back("line " + std::to_string(line) + ": duplicate record for '" +
                               std::string(id) + "', keeping the last");
    }
    store.set(std::move(meta));
  }
  if (warnings) {
    warnings->insert(warnings->end(), local_warnings.begin(), local_warnings.end());
  }
  return store;
}

MetaStore load_metadata_file(const std::string& path, const WeightedDigraph& g,
                             const MetadataConfig& cfg, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return load_metadata(in, g, cfg, warnings);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace eqrank
