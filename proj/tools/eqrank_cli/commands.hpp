#pragma once

#include "config.hpp"

namespace eqrank::cli {

struct CommandOptions {
  RunConfig config;
  bool dry_run = false;
};

/// Each command returns the process exit status; errors are thrown as
/// InputError (status 1) or InvariantError (status 2) and mapped in main.
int cmd_cluster(const CommandOptions& opt);
int cmd_themes(const CommandOptions& opt);
int cmd_evaluate(const CommandOptions& opt);
int cmd_sweep(const CommandOptions& opt);
int cmd_gen(const CommandOptions& opt);

}  // namespace eqrank::cli
