// eqrank command-line front end.
//
//   eqrank cluster  --edges cites.tsv --output out/
//   eqrank themes   --output out/ --metadata meta.tsv
//   eqrank evaluate --output out/ --metadata meta.tsv --external list.txt
//   eqrank sweep    --edges cites.tsv --cutoffs 4 8 12 16 20
//   eqrank gen      --model citation_like --vertices 10000 --seed 7
//
// Exit status: 0 success, 1 input error, 2 internal invariant violation.
#include <exception>
#include <filesystem>
#include <functional>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "commands.hpp"
#include "config.hpp"

namespace {

constexpr int kInputError = 1;
constexpr int kInvariantError = 2;

}  // namespace

int main(int argc, char** argv) {
  using namespace eqrank::cli;

  CLI::App app{"Theme hierarchies of citation graphs by EqRank clustering"};
  app.set_version_flag("--version", EQRANK_VERSION);
  app.require_subcommand(1);

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const CommandOptions&);
  };
  const Command commands[] = {
      {"cluster", "weight the graph, build the theme hierarchy of every component", cmd_cluster},
      {"themes", "label and rank the themes of a clustering", cmd_themes},
      {"evaluate", "community indices, trends and overlap with external lists", cmd_evaluate},
      {"sweep", "level count of the largest component for a range of cutoffs", cmd_sweep},
      {"gen", "write a synthetic test graph", cmd_gen},
  };

  Overrides overrides;
  bool dry_run = false;
  std::function<int(const CommandOptions&)> selected;
  for (const auto& cmd : commands) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    overrides.attach(*sub);
    sub->add_flag("-n,--dry-run", dry_run, "validate config and inputs, write nothing");
    sub->callback([&selected, run = cmd.run] { selected = run; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : kInputError;
  }

  try {
    CommandOptions opt{overrides.resolve(), dry_run};
    return selected(opt);
  } catch (const eqrank::InputError& e) {
    std::cerr << "eqrank: error: " << e.what() << '\n';
    return kInputError;
  } catch (const eqrank::InvariantError& e) {
    std::cerr << "eqrank: internal error: " << e.what() << '\n';
    return kInvariantError;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "eqrank: error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "eqrank: internal error: " << e.what() << '\n';
    return kInvariantError;
  }
}
