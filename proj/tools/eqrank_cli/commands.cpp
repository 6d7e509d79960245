#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "eqrank/eqrank.hpp"
#include "eqrank/evaluation.hpp"
#include "eqrank/generators.hpp"
#include "eqrank/graph_io.hpp"
#include "eqrank/hierarchy_io.hpp"
#include "eqrank/labels.hpp"
#include "eqrank/ranking.hpp"
#include "eqrank/themes.hpp"
#include "eqrank/weights.hpp"
#include "output.hpp"

namespace eqrank::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr const char* kGraphFile = "graph.tsv";
constexpr const char* kHierarchyFile = "hierarchy.json";

void require_file(const std::string& path, const char* what) {
  if (path.empty()) throw InputError(std::string("no ") + what + " given");
  if (!fs::is_regular_file(path)) throw InputError(std::string(what) + " not found: " + path);
}

struct Input {
  WeightedDigraph raw;
  IngestReport report;
};

Input read_edges(const RunConfig& c, Log& log) {
  require_file(c.edges, "edge file");
  Input in;
  try {
    in.raw = load_graph_file(c.edges, c.graph_format(), &in.report);
  } catch (const InputError& e) {
    throw InputError(c.edges + ": " + e.what());
  }
  if (in.raw.edge_count() == 0) throw InputError(c.edges + ": no citation links found");
  for (const auto& w : in.report.warnings) log.warn(c.edges + ": " + w);
  log.info("read " + std::to_string(in.raw.vertex_count()) + " vertices and " +
           std::to_string(in.raw.edge_count()) + " links from " + c.edges);
  return in;
}

std::optional<MetaStore> read_metadata(const RunConfig& c, const WeightedDigraph& g, Log& log) {
  if (c.metadata.empty()) {
    log.warn("no metadata given; labels, author rankings and trends are skipped");
    return std::nullopt;
  }
  require_file(c.metadata, "metadata file");
  std::vector<std::string> warnings;
  MetaStore meta;
  try {
    meta = load_metadata_file(c.metadata, g, c.metadata_config(), &warnings);
  } catch (const InputError& e) {
    throw InputError(c.metadata + ": " + e.what());
  }
  for (const auto& w : warnings) log.warn(c.metadata + ": " + w);
  log.info("read metadata for " + std::to_string(meta.record_count()) + " papers");
  return meta;
}

StopList read_stop_list(const RunConfig& c, Log& log) {
  if (c.stop_list.empty()) {
    log.info("no stop list given; using the built-in list");
    return default_stop_list();
  }
  require_file(c.stop_list, "stop list");
  std::ifstream in(c.stop_list);
  return load_stop_list(in);
}

std::vector<std::string> read_id_list(const std::string& path) {
  require_file(path, "external list");
  std::ifstream in(path);
  std::vector<std::string> ids;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    ids.push_back(line.substr(first, last - first + 1));
  }
  return ids;
}

struct Artifacts {
  WeightedDigraph graph;
  Clustering clustering;
};

Artifacts read_artifacts(const RunConfig& c) {
  const fs::path dir(c.output);
  const fs::path graph_path = dir / kGraphFile;
  const fs::path hierarchy_path = dir / kHierarchyFile;
  if (!fs::is_regular_file(graph_path) || !fs::is_regular_file(hierarchy_path)) {
    throw InputError("no clustering in " + c.output + "; run 'eqrank cluster' first");
  }
  Artifacts a;
  try {
    a.graph = load_graph_file(graph_path.string(), GraphFormat::kNormalized);
  } catch (const InputError& e) {
    throw InputError(graph_path.string() + ": " + e.what());
  }
  std::ifstream in(hierarchy_path);
  try {
    a.clustering = load_clustering(in, a.graph);
  } catch (const InputError& e) {
    throw InputError(hierarchy_path.string() + ": " + e.what());
  }
  return a;
}

std::vector<std::string> artifact_inputs(const RunConfig& c) {
  return {(fs::path(c.output) / kGraphFile).string(), (fs::path(c.output) / kHierarchyFile).string()};
}

std::string theme_id(const Theme& t) {
  return std::to_string(t.level) + "." + std::to_string(t.number);
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string join_sizes(const std::vector<std::size_t>& sizes) {
  std::vector<std::string> s;
  for (auto x : sizes) s.push_back(std::to_string(x));
  return join(s, ",");
}

// Level >= 2 root sets hold parent-level block ids; show them as theme ids.
using ThemeIndex = std::map<std::tuple<std::size_t, std::size_t, BlockId>, std::string>;

ThemeIndex index_themes(const std::vector<std::vector<Theme>>& levels) {
  ThemeIndex index;
  for (const auto& level : levels) {
    for (const auto& t : level) index[{t.level, t.component, t.block}] = theme_id(t);
  }
  return index;
}

std::vector<std::string> root_names(const Theme& t, const std::vector<VertexId>& roots,
                                    const WeightedDigraph& g, const ThemeIndex& index) {
  std::vector<std::string> out;
  for (VertexId r : roots) {
    out.push_back(t.level == 1 ? g.name(r) : index.at({t.level - 1, t.component, r}));
  }
  auto number = [](const std::string& id) { return std::stoul(id.substr(id.find('.') + 1)); };
  if (t.level == 1) {
    std::sort(out.begin(), out.end());
  } else {
    std::sort(out.begin(), out.end(),
              [&](const std::string& x, const std::string& y) { return number(x) < number(y); });
  }
  return out;
}

void print_dry_run(const std::string& command, const RunConfig& c, const std::string& detail) {
  std::cout << "dry run: " << command << " validated; " << detail << "; outputs would go to "
            << c.output << "\n";
}

double unit_fraction(const WeightedDigraph& g) { return degree_stats(g).unit_out_degree; }

}  // namespace

int cmd_cluster(const CommandOptions& opt) {
  const RunConfig& c = opt.config;
  Log log;
  Input in = read_edges(c, log);
  if (opt.dry_run) {
    print_dry_run("cluster", c,
                  std::to_string(in.raw.vertex_count()) + " vertices, " +
                      std::to_string(in.raw.edge_count()) + " links");
    return 0;
  }

  const WeightedDigraph g = compute_weights(in.raw, {c.a});
  const Clustering clustering = cluster_components(g, {c.f_cut}, c.largest_only);
  const auto themes = collect_themes(clustering);
  OutputDir out(c.output, "cluster");

  std::ostringstream graph_text;
  save_graph(graph_text, g);
  out.write(kGraphFile, graph_text.str());
  std::ostringstream hierarchy_text;
  save_clustering(hierarchy_text, clustering);
  out.write(kHierarchyFile, hierarchy_text.str());

  std::ostringstream components;
  components << "component\tvertices\tedges\tstatus\tlevels\tlevel_sizes\tactual_themes\torphans\n";
  for (std::size_t i = 0; i < clustering.components.size(); ++i) {
    const auto& comp = clustering.components[i];
    const bool clustered = comp.status == ComponentClustering::Status::kClustered;
    components << i << '\t' << comp.vertices.size() << '\t'
               << comp.result.hierarchy.levels.front().graph.edge_count() << '\t'
               << (clustered ? "clustered" : "below_cutoff") << '\t' << comp.result.levels()
               << '\t' << join_sizes(comp.result.hierarchy.level_sizes()) << '\t'
               << comp.result.actual_themes << '\t' << comp.result.orphans.size() << '\n';
  }
  out.write("components.tsv", components.str());

  std::ostringstream partitions;
  partitions << "level\ttheme\tcomponent\tblock\tpaper\n";
  for (const auto& level : themes) {
    for (const auto& t : level) {
      for (VertexId v : t.members) {
        partitions << t.level << '\t' << t.number << '\t' << t.component << '\t' << t.block
                   << '\t' << g.name(v) << '\n';
      }
    }
  }
  out.write("partitions.tsv", partitions.str());

  const auto wcc = weakly_connected_components(g);
  std::ostringstream summary;
  summary << "vertices\t" << g.vertex_count() << "\n"
          << "links\t" << g.edge_count() << "\n"
          << "self_citations_dropped\t" << in.report.self_loops << "\n"
          << "duplicates_dropped\t" << in.report.duplicates << "\n"
          << "a\t" << num(c.a) << "\n"
          << "f_cut\t" << c.f_cut << "\n"
          << "max_link_unit_out_degree\t" << fixed(unit_fraction(max_links(g))) << "\n"
          << "inverted_max_link_unit_out_degree\t" << fixed(unit_fraction(max_links(invert(g))))
          << "\n"
          << "weak_components\t" << wcc.block_count() << "\n"
          << "clustered_components\t" << clustering.components.size() << "\n";
  if (!clustering.components.empty()) {
    const auto& main = clustering.components.front();
    summary << "largest_component\t" << main.vertices.size() << "\n"
            << "level_sizes\t" << join_sizes(main.result.hierarchy.level_sizes()) << "\n"
            << "levels\t" << main.result.levels() << "\n"
            << "actual_themes\t" << main.result.actual_themes << "\n"
            << "orphans\t" << main.result.orphans.size() << "\n";
  }
  out.write("summary.tsv", summary.str());

  if (!clustering.components.empty()) {
    const auto& main = clustering.components.front();
    log.info("largest component: " + std::to_string(main.vertices.size()) + " vertices, level sizes " +
             join_sizes(main.result.hierarchy.level_sizes()) + ", " +
             std::to_string(main.result.levels()) + " theme level(s)");
  }
  std::size_t below = 0;
  for (const auto& comp : clustering.components) {
    below += comp.status == ComponentClustering::Status::kBelowCutoff;
  }
  if (below) {
    log.info(std::to_string(below) + " component(s) have no block of " + std::to_string(c.f_cut) +
             " papers and are reported unclustered");
  }
  out.commit(ordered_json(c), {c.edges}, log);
  return 0;
}

int cmd_themes(const CommandOptions& opt) {
  const RunConfig& c = opt.config;
  Log log;
  Artifacts art = read_artifacts(c);
  const WeightedDigraph& g = art.graph;
  const auto meta = read_metadata(c, g, log);
  const StopList stop = read_stop_list(c, log);
  if (opt.dry_run) {
    print_dry_run("themes", c,
                  std::to_string(art.clustering.max_level()) + " level(s) in " + c.output);
    return 0;
  }

  auto levels = collect_themes(art.clustering);
  const ThemeIndex index = index_themes(levels);
  const LocalMaps maps = LocalMaps::from_graph(g);

  std::ostringstream jsonl, report;
  for (auto& level : levels) {
    if (level.empty()) continue;
    std::vector<std::vector<VertexId>> members;
    for (const auto& t : level) members.push_back(t.members);
    std::optional<LabelCorpus> corpus;
    if (meta) corpus.emplace(members, *meta, stop);
    report << "# level " << level.front().level << ": " << level.size() << " themes\n";

    for (auto& t : level) {
      std::vector<ScoredPair> label;
      if (meta) {
        std::vector<std::string> warnings;
        label = label_theme(t.members, *meta, stop, &*corpus, 7, &warnings);
        for (const auto& w : warnings) log.warn("theme " + theme_id(t) + ": " + w);
        for (const auto& p : label) t.label.push_back(p.pair);
      }
      const ThemeRanking papers = rank_papers(t.members, g, maps);
      std::optional<ThemeRanking> authors;
      if (meta) authors = rank_authors(papers, *meta);

      auto entries = [&](std::span<const RankEntry> ranked) {
        ordered_json list = ordered_json::array();
        for (const auto& e : top(ranked, c.top_k)) {
          list.push_back({{"id", e.subject}, {"authority", e.authority_number}, {"hub", e.hub_number}});
        }
        return list;
      };
      ordered_json j;
      j["level"] = t.level;
      j["theme"] = t.number;
      j["component"] = t.component;
      j["block"] = t.block;
      j["size"] = t.size();
      j["orphan"] = t.orphan;
      ordered_json pairs = ordered_json::array();
      for (const auto& p : label) {
        pairs.push_back({{"pair", p.pair}, {"frequency", p.frequency}, {"score", p.score}});
      }
      j["label"] = std::move(pairs);
      j["root_authorities"] = root_names(t, t.root_authorities, g, index);
      j["root_hubs"] = root_names(t, t.root_hubs, g, index);
      j["papers_by_authority"] = entries(papers.by_authority);
      j["papers_by_hub"] = entries(papers.by_hub);
      if (authors) {
        j["authors_by_authority"] = entries(authors->by_authority);
        j["authors_by_hub"] = entries(authors->by_hub);
      }
      jsonl << j.dump() << '\n';

      report << "\ntheme " << theme_id(t) << "  size " << t.size() << (t.orphan ? "  orphan" : "")
             << "\n";
      if (meta) report << "  label: " << (t.label.empty() ? "-" : join(t.label, "; ")) << "\n";
      report << "  root authorities: " << join(root_names(t, t.root_authorities, g, index), " ")
             << "\n  root hubs: " << join(root_names(t, t.root_hubs, g, index), " ") << "\n";
      auto table = [&](const char* title, std::span<const RankEntry> ranked) {
        report << "  " << title << ":\n";
        std::size_t rank = 0;
        for (const auto& e : top(ranked, c.top_k)) {
          report << "    " << ++rank << '\t' << e.subject << '\t' << brief(e.authority_number)
                 << '\t' << brief(e.hub_number);
          if (e.paper && meta) {
            if (const DocumentMeta* m = meta->find(*e.paper)) report << '\t' << m->title;
          }
          report << '\n';
        }
      };
      table("papers by authority number", papers.by_authority);
      table("papers by hub number", papers.by_hub);
      if (authors) {
        table("authors by authority number", authors->by_authority);
        table("authors by hub number", authors->by_hub);
      }
    }
    report << "\n";
  }

  OutputDir out(c.output, "themes");
  out.write("themes.jsonl", jsonl.str());
  out.write("themes.txt", report.str());
  std::vector<std::string> inputs = artifact_inputs(c);
  if (!c.metadata.empty()) inputs.push_back(c.metadata);
  if (!c.stop_list.empty()) inputs.push_back(c.stop_list);
  out.commit(ordered_json(c), inputs, log);
  return 0;
}

int cmd_evaluate(const CommandOptions& opt) {
  const RunConfig& c = opt.config;
  Log log;
  Artifacts art = read_artifacts(c);
  const WeightedDigraph& g = art.graph;
  const auto meta = read_metadata(c, g, log);
  std::vector<std::pair<std::string, std::vector<std::string>>> lists;
  for (const auto& path : c.external) lists.emplace_back(path, read_id_list(path));
  if (opt.dry_run) {
    print_dry_run("evaluate", c,
                  std::to_string(art.clustering.max_level()) + " level(s), " +
                      std::to_string(lists.size()) + " external list(s)");
    return 0;
  }

  const auto levels = collect_themes(art.clustering);
  std::optional<YearWindow> window;
  if (meta) {
    auto span = meta->year_span();
    if (!span) {
      log.warn("metadata has no dated papers; trends are skipped");
    } else {
      window = YearWindow{c.year_first ? c.year_first : span->first,
                          c.year_last ? c.year_last : span->second};
      log.info("trend window " + std::to_string(window->first) + "-" + std::to_string(window->last));
    }
  }

  std::ostringstream community, trends, yearly, overlap, report;
  community << "level\ttheme\tsize\tinner\touter\tindex\tideal\n";
  trends << "level\ttheme\tsize\tfirst_year\tlast_year\tslope\ttrend\n";
  yearly << "level\ttheme\tyear\tcount\n";
  overlap << "list\tlevel\ttheme\toverlap\tmatched\tresolved\tunresolved\n";

  for (const auto& level : levels) {
    if (level.empty()) continue;
    std::vector<std::vector<VertexId>> members;
    for (const auto& t : level) members.push_back(t.members);
    const CommunityReport cr = community_report(g, members);
    report << "# level " << level.front().level << ": " << level.size() << " themes, "
           << cr.ideal_count << " ideal communities, weighted mean index "
           << fixed(cr.weighted_mean) << "\n";
    report << "theme\tsize\tcommunity_index\tideal\ttrend\n";
    for (std::size_t i = 0; i < level.size(); ++i) {
      const Theme& t = level[i];
      const CommunityWeights w = community_weights(g, t.members);
      community << t.level << '\t' << t.number << '\t' << t.size() << '\t' << num(w.inner) << '\t'
                << num(w.outer) << '\t' << fixed(cr.index[i]) << '\t' << (cr.ideal[i] ? 1 : 0)
                << '\n';
      std::string symbol = "";
      if (window) {
        const TrendEntry te = theme_dynamics(t.members, *meta, *window, c.trend());
        symbol = std::string(trend_symbol(te.trend));
        trends << t.level << '\t' << t.number << '\t' << t.size() << '\t' << window->first << '\t'
               << window->last << '\t' << fixed(te.slope) << '\t' << symbol << '\n';
        for (std::size_t y = 0; y < te.counts.size(); ++y) {
          yearly << t.level << '\t' << t.number << '\t' << te.first_year + static_cast<int>(y)
                 << '\t' << te.counts[y] << '\n';
        }
      }
      report << theme_id(t) << '\t' << t.size() << '\t' << fixed(cr.index[i]) << '\t'
             << (cr.ideal[i] ? "yes" : "no") << '\t' << (symbol.empty() ? "-" : symbol) << '\n';
    }
    report << "\n";

    for (const auto& [path, ids] : lists) {
      // Best-matching theme of the level; ties go to the lower theme number.
      std::optional<OverlapResult> best;
      const Theme* best_theme = nullptr;
      for (const auto& t : level) {
        OverlapResult r = reference_overlap(t.members, ids, g);
        if (!best || r.overlap > best->overlap) {
          best = std::move(r);
          best_theme = &t;
        }
      }
      overlap << path << '\t' << best_theme->level << '\t' << best_theme->number << '\t'
              << fixed(best->overlap) << '\t' << best->matched << '\t' << best->resolved << '\t'
              << best->unresolved.size() << '\n';
      if (level.front().level == 1 && !best->unresolved.empty()) {
        log.warn(path + ": " + std::to_string(best->unresolved.size()) +
                 " id(s) not in the graph, first: " + best->unresolved.front());
      }
    }
  }

  OutputDir out(c.output, "evaluate");
  out.write("community.tsv", community.str());
  out.write("evaluation.txt", report.str());
  if (window) {
    out.write("trends.tsv", trends.str());
    out.write("yearly_counts.tsv", yearly.str());
  }
  if (!lists.empty()) out.write("overlap.tsv", overlap.str());
  std::vector<std::string> inputs = artifact_inputs(c);
  if (!c.metadata.empty()) inputs.push_back(c.metadata);
  for (const auto& path : c.external) inputs.push_back(path);
  out.commit(ordered_json(c), inputs, log);
  return 0;
}

int cmd_sweep(const CommandOptions& opt) {
  const RunConfig& c = opt.config;
  Log log;
  Input in = read_edges(c, log);
  std::vector<std::size_t> cutoffs = c.cutoffs;
  std::sort(cutoffs.begin(), cutoffs.end());
  cutoffs.erase(std::unique(cutoffs.begin(), cutoffs.end()), cutoffs.end());
  if (opt.dry_run) {
    print_dry_run("sweep", c, std::to_string(cutoffs.size()) + " cutoff(s)");
    return 0;
  }

  const WeightedDigraph g = compute_weights(in.raw, {c.a});
  const Partition wcc = weakly_connected_components(g);
  BlockId largest = 0;
  for (BlockId b = 1; b < wcc.block_count(); ++b) {
    if (wcc.block_size(b) > wcc.block_size(largest)) largest = b;
  }
  const auto members = wcc.members(largest);
  const WeightedDigraph main = induced_subgraph(g, {members.begin(), members.end()});
  log.info("sweeping the largest component (" + std::to_string(main.vertex_count()) + " vertices)");

  struct Row {
    std::size_t f_cut;
    std::optional<ThemeHierarchy> result;
  };
  std::vector<Row> rows;
  for (auto cut : cutoffs) {
    Row row{cut, std::nullopt};
    try {
      row.result = build_theme_hierarchy(main, {cut});
    } catch (const CutoffTooHighError&) {
      log.info("f_cut " + std::to_string(cut) + ": no block reaches the cutoff");
    }
    rows.push_back(std::move(row));
  }

  std::ostringstream table;
  table << "f_cut\tstatus\tlevels\tlevel_sizes\tactual_themes\torphans\n";
  for (const auto& r : rows) {
    table << r.f_cut << '\t';
    if (r.result) {
      table << "ok\t" << r.result->levels() << '\t' << join_sizes(r.result->hierarchy.level_sizes())
            << '\t' << r.result->actual_themes << '\t' << r.result->orphans.size() << '\n';
    } else {
      table << "cutoff_too_high\t-\t-\t-\t-\n";
    }
  }

  // Smallest cutoff from which the level count stays the same up to the
  // largest cutoff that still produced a hierarchy.
  std::ostringstream plateau;
  auto last = std::find_if(rows.rbegin(), rows.rend(), [](const Row& r) { return r.result.has_value(); });
  if (last != rows.rend()) {
    const std::size_t n = last->result->levels();
    auto first = last;
    while (std::next(first) != rows.rend() && std::next(first)->result &&
           std::next(first)->result->levels() == n) {
      ++first;
    }
    plateau << "levels\t" << n << "\nf_min\t" << first->f_cut << "\nf_max\t" << last->f_cut << "\n";
  } else {
    plateau << "levels\t-\nf_min\t-\nf_max\t-\n";
  }

  OutputDir out(c.output, "sweep");
  out.write("sweep.tsv", table.str());
  out.write("plateau.tsv", plateau.str());
  out.commit(ordered_json(c), {c.edges}, log);
  return 0;
}

int cmd_gen(const CommandOptions& opt) {
  const RunConfig& c = opt.config;
  const GraphModel model = parse_graph_model(c.model);
  Log log;
  if (opt.dry_run) {
    print_dry_run("gen", c, std::string(graph_model_name(model)) + " with " +
                                std::to_string(c.vertices) + " vertices, seed " +
                                std::to_string(c.seed));
    return 0;
  }
  const WeightedDigraph g = generate_test_graph(model, c.generator(), c.seed);
  log.info("generated " + std::string(graph_model_name(model)) + " graph: " +
           std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) +
           " links");
  OutputDir out(c.output, "gen");
  std::ostringstream edges;
  if (c.min_weight == 1 && c.max_weight == 1) {
    save_edge_list(edges, g);
    out.write("edges.tsv", edges.str());
  } else {
    save_graph(edges, g);
    out.write("graph.normalized.tsv", edges.str());
  }
  out.commit(ordered_json(c), {}, log);
  return 0;
}

}  // namespace eqrank::cli
