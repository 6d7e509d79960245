#include "eqrank/hierarchy_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include <json.hpp>

namespace eqrank {

using nlohmann::json;

namespace {

constexpr const char* kFormat = "eqrank-clustering";
constexpr int kVersion = 1;

const char* status_name(ComponentClustering::Status s) {
  return s == ComponentClustering::Status::kClustered ? "clustered" : "below_cutoff";
}

}  // namespace

void save_clustering(std::ostream& out, const Clustering& c) {
  json doc;
  doc["format"] = kFormat;
  doc["version"] = kVersion;
  doc["f_cut"] = c.f_cut;
  json components = json::array();
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    const ComponentClustering& comp = c.components[i];
    const Hierarchy& h = comp.result.hierarchy;
    json levels = json::array();
    for (std::size_t l = 0; l < h.levels.size(); ++l) {
      json level{{"level", l},
                 {"size", h.levels[l].graph.vertex_count()},
                 {"edges", h.levels[l].graph.edge_count()}};
      if (l > 0) {
        const Partition& p = h.levels[l].projection;
        level["projection"] = std::vector<BlockId>(p.assignment().begin(), p.assignment().end());
        level["blocks"] = p.blocks();
      }
      levels.push_back(std::move(level));
    }
    components.push_back({{"component", i},
                          {"status", status_name(comp.status)},
                          {"vertices", comp.vertices},
                          {"levels_count", comp.result.levels()},
                          {"actual_themes", comp.result.actual_themes},
                          {"orphans", comp.result.orphans},
                          {"levels", std::move(levels)}});
  }
  doc["components"] = std::move(components);
  out << doc.dump() << '\n';
}

Clustering load_clustering(std::istream& in, const WeightedDigraph& g) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(std::string("clustering file is not valid JSON: ") + e.what());
  }
  try {
    if (doc.at("format") != kFormat || doc.at("version") != kVersion) {
      throw InputError("unsupported clustering format/version");
    }
    Clustering c;
    c.f_cut = doc.at("f_cut").get<std::size_t>();
    for (const json& jc : doc.at("components")) {
      ComponentClustering comp;
      comp.vertices = jc.at("vertices").get<std::vector<VertexId>>();
      const std::string status = jc.at("status").get<std::string>();
      if (status == "clustered") {
        comp.status = ComponentClustering::Status::kClustered;
      } else if (status == "below_cutoff") {
        comp.status = ComponentClustering::Status::kBelowCutoff;
      } else {
        throw InputError("unknown component status '" + status + "'");
      }
      comp.result.actual_themes = jc.at("actual_themes").get<std::size_t>();
      comp.result.orphans = jc.at("orphans").get<std::vector<BlockId>>();
      for (VertexId v : comp.vertices) {
        if (v >= g.vertex_count()) throw InputError("clustering refers to a vertex not in the graph");
      }

      Hierarchy& h = comp.result.hierarchy;
      const json& levels = jc.at("levels");
      for (std::size_t l = 0; l < levels.size(); ++l) {
        const json& jl = levels[l];
        if (jl.at("level").get<std::size_t>() != l) throw InputError("levels out of order");
        if (l == 0) {
          h.levels.push_back({induced_subgraph(g, comp.vertices), Partition{}});
        } else {
          auto labels = jl.at("projection").get<std::vector<std::uint64_t>>();
          Partition p = Partition::from_labels(labels);
          if (!std::equal(labels.begin(), labels.end(), p.assignment().begin(),
                          p.assignment().end())) {
            throw InputError("projection at level " + std::to_string(l) + " is not canonical");
          }
          FactorGraph f = factor(h.levels.back().graph, p);
          h.levels.push_back({std::move(f.graph), std::move(f.projection)});
        }
        if (h.levels.back().graph.vertex_count() != jl.at("size").get<std::size_t>() ||
            h.levels.back().graph.edge_count() != jl.at("edges").get<std::size_t>()) {
          throw InputError("level " + std::to_string(l) +
                           " does not match the graph; was it clustered from a different input?");
        }
      }
      h.terminal = true;
      c.components.push_back(std::move(comp));
    }
    return c;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed clustering file: ") + e.what());
  } catch (const InvariantError& e) {
    throw InputError(std::string("inconsistent clustering file: ") + e.what());
  }
}

}  // namespace eqrank
