#include "config.hpp"

#include <algorithm>
#include <fstream>

#include <CLI11.hpp>

#include "eqrank/themes.hpp"
#include "eqrank/weights.hpp"

namespace eqrank::cli {

using nlohmann::ordered_json;

namespace {

// Visits every config field in declaration order.
template <class Config, class F>
void for_each_field(Config& c, F&& f) {
  f("edges", c.edges);
  f("edges_format", c.edges_format);
  f("metadata", c.metadata);
  f("stop_list", c.stop_list);
  f("external", c.external);
  f("output", c.output);
  f("a", c.a);
  f("f_cut", c.f_cut);
  f("largest_only", c.largest_only);
  f("cutoffs", c.cutoffs);
  f("epsilon_fraction", c.epsilon_fraction);
  f("burst_factor", c.burst_factor);
  f("year_first", c.year_first);
  f("year_last", c.year_last);
  f("min_year", c.min_year);
  f("max_year", c.max_year);
  f("top_k", c.top_k);
  f("model", c.model);
  f("vertices", c.vertices);
  f("mean_out_degree", c.mean_out_degree);
  f("layers", c.layers);
  f("edge_probability", c.edge_probability);
  f("min_weight", c.min_weight);
  f("max_weight", c.max_weight);
  f("seed", c.seed);
}

std::string flag_of(std::string key) {
  std::replace(key.begin(), key.end(), '_', '-');
  return "--" + key;
}

// Converts one command-line token to the JSON type of the field's default.
ordered_json convert(const std::string& key, const ordered_json& like, const std::string& text) {
  std::size_t used = 0;
  try {
    switch (like.type()) {
      case ordered_json::value_t::number_unsigned: {
        if (!text.empty() && text[0] == '-') break;
        auto v = std::stoull(text, &used);
        if (used == text.size()) return v;
        break;
      }
      case ordered_json::value_t::number_integer: {
        auto v = std::stoll(text, &used);
        if (used == text.size()) return v;
        break;
      }
      case ordered_json::value_t::number_float: {
        auto v = std::stod(text, &used);
        if (used == text.size()) return v;
        break;
      }
      default:
        return text;
    }
  } catch (const std::logic_error&) {
  }
  throw InputError("invalid value '" + text + "' for " + flag_of(key));
}

void validate(const RunConfig& c) {
  WeightConfig{c.a}.validate();
  CutoffConfig{c.f_cut}.validate();
  (void)c.graph_format();
  if (c.cutoffs.empty()) throw InputError("cutoffs must list at least one value");
  for (auto cut : c.cutoffs) CutoffConfig{cut}.validate();
  if (!(c.epsilon_fraction >= 0)) throw InputError("epsilon_fraction must be nonnegative");
  if (!(c.burst_factor > 0)) throw InputError("burst_factor must be positive");
  if (c.year_first != 0 && c.year_last != 0 && c.year_last < c.year_first) {
    throw InputError("year_last is before year_first");
  }
  if (c.min_year > c.max_year) throw InputError("min_year exceeds max_year");
  if (c.top_k == 0) throw InputError("top_k must be at least 1");
  if (c.output.empty()) throw InputError("output directory must be set");
  c.generator().validate(parse_graph_model(c.model));
}

}  // namespace

GraphFormat RunConfig::graph_format() const {
  if (edges_format == "edgelist") return GraphFormat::kEdgeList;
  if (edges_format == "normalized") return GraphFormat::kNormalized;
  throw InputError("edges_format must be 'edgelist' or 'normalized', got '" + edges_format + "'");
}

TrendConfig RunConfig::trend() const { return {epsilon_fraction, burst_factor}; }

GeneratorParams RunConfig::generator() const {
  return {vertices, mean_out_degree, layers, edge_probability, min_weight, max_weight};
}

void to_json(ordered_json& j, const RunConfig& c) {
  j = ordered_json::object();
  for_each_field(c, [&](const char* key, const auto& value) { j[key] = value; });
}

void from_json(const ordered_json& j, RunConfig& c) {
  if (!j.is_object()) throw InputError("config must be a JSON object");
  const ordered_json known = RunConfig{};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw InputError("unknown config key '" + key + "'");
  }
  for_each_field(c, [&](const char* key, auto& value) {
    if (!j.contains(key)) return;
    try {
      j.at(key).get_to(value);
    } catch (const nlohmann::json::exception&) {
      throw InputError(std::string("config key '") + key + "' has the wrong type");
    }
  });
}

void Overrides::attach(CLI::App& app) {
  app.add_option("-c,--config", config_path_, "JSON config file; flags override its values");
  const ordered_json defaults = RunConfig{};
  for (const auto& [key, like] : defaults.items()) {
    const std::string flag = flag_of(key);
    if (like.is_boolean()) {
      app.add_flag_callback(flag, [this, key = key] { values_[key] = true; }, "set " + key);
      app.add_flag_callback("--no-" + flag.substr(2), [this, key = key] { values_[key] = false; },
                            "clear " + key);
    } else if (like.is_array()) {
      const ordered_json element = like.empty() ? ordered_json("") : like.front();
      app.add_option_function<std::vector<std::string>>(
          flag,
          [this, key = key, element](const std::vector<std::string>& items) {
            ordered_json list = ordered_json::array();
            for (const auto& item : items) list.push_back(convert(key, element, item));
            values_[key] = std::move(list);
          },
          key + " (repeatable or space separated)");
    } else {
      app.add_option_function<std::string>(
          flag,
          [this, key = key, like = like](const std::string& text) {
            values_[key] = convert(key, like, text);
          },
          key + " (default " + like.dump() + ")");
    }
  }
}

RunConfig Overrides::resolve() const {
  ordered_json merged = RunConfig{};
  if (!config_path_.empty()) {
    std::ifstream in(config_path_);
    if (!in) throw InputError("cannot open config file " + config_path_);
    ordered_json file;
    try {
      file = ordered_json::parse(in, nullptr, true, true);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError("config file " + config_path_ + " is not valid JSON: " + e.what());
    }
    RunConfig check;
    from_json(file, check);
    for (const auto& [key, value] : file.items()) merged[key] = value;
  }
  for (const auto& [key, value] : values_) merged[key] = value;
  RunConfig c;
  from_json(merged, c);
  validate(c);
  return c;
}

}  // namespace eqrank::cli
