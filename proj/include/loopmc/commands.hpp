#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace loopmc {

// Options collected by the CLI front end; config-file keys provide the rest.
struct CliOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;  // overrides the config's seed
  std::optional<std::string> out_dir;
  std::optional<int> chains;
  std::optional<long> cap;
  std::vector<std::string> args;  // extra positionals (compare: mc, oracle)
};

int cmd_sample(const CliOptions& cli);
int cmd_oracle(const CliOptions& cli);
int cmd_verify(const CliOptions& cli);
int cmd_compare(const CliOptions& cli);
int cmd_scan(const CliOptions& cli);

// Runs a command mapping thrown errors onto the documented exit codes:
// bad configuration or parameters 1, I/O failure 3, dimension cap 4.
// (Success is 0; sample/scan return 2 on low-effective-sample warnings and
// compare returns 5 when a z-score exceeds 3.)
int run_command(int (*fn)(const CliOptions&), const CliOptions& cli);

const char* code_version();

}  // namespace loopmc
