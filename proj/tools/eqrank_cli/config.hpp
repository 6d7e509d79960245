#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqrank/evaluation.hpp"
#include "eqrank/generators.hpp"
#include "eqrank/graph_io.hpp"

namespace CLI {
class App;
}

namespace eqrank::cli {

/// Everything a run needs. Field names double as config keys; each one is
/// also a flag with '_' spelled '-' (f_cut -> --f-cut).
struct RunConfig {
  std::string edges;
  std::string edges_format = "edgelist";
  std::string metadata;
  std::string stop_list;
  std::vector<std::string> external;
  std::string output = "eqrank-out";

  double a = 0.9;
  std::size_t f_cut = 20;
  bool largest_only = false;
  std::vector<std::size_t> cutoffs = {2, 4, 6, 8, 10, 15, 20, 25, 30, 40};

  double epsilon_fraction = 0.05;
  double burst_factor = 2.0;
  int year_first = 0;  // 0: take the span of the metadata
  int year_last = 0;
  int min_year = 1950;
  int max_year = 2100;
  std::size_t top_k = 10;

  std::string model = "citation_like";
  std::size_t vertices = 1000;
  double mean_out_degree = 12.0;
  std::size_t layers = 4;
  double edge_probability = 0.2;
  std::uint32_t min_weight = 1;
  std::uint32_t max_weight = 1;
  std::uint64_t seed = 1;

  GraphFormat graph_format() const;
  TrendConfig trend() const;
  GeneratorParams generator() const;
  MetadataConfig metadata_config() const { return {min_year, max_year}; }
};

void to_json(nlohmann::ordered_json& j, const RunConfig& c);
void from_json(const nlohmann::ordered_json& j, RunConfig& c);

/// Collects flag values given on the command line, keyed by config field.
class Overrides {
 public:
  /// Adds --config and one flag per config field to `app`.
  void attach(CLI::App& app);
  /// Defaults, then the config file (if any), then flags. Unknown keys and
  /// out-of-range values throw InputError.
  RunConfig resolve() const;

 private:
  std::string config_path_;
  std::map<std::string, nlohmann::ordered_json> values_;
};

}  // namespace eqrank::cli
