// Subcommand implementations. Each returns a process exit code:
// 0 success, 1 validation failure, 2 usage or configuration error.
#pragma once

#include <string>

namespace cavex::cli {

int cmd_evolve(const std::string& config_path);
int cmd_fig1(const std::string& out_dir);
int cmd_validate(int n_max, unsigned long seed, bool inject_sign_error);
int cmd_transfer(const std::string& scenario_name, double xi, int k, int l);

}  // namespace cavex::cli
