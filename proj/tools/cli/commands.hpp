// Command dispatch for the convinv tool. run() takes the subcommand name,
// its raw argument vector and a base configuration (command-line flags
// override the base), and returns the finished report.
//
// Exit codes: 0 success, 1 a mathematical inconsistency was detected
// (classifier vs decision disagreement, Monte Carlo beyond three standard
// errors), 2 usage or input errors.

#ifndef CONVINV_CLI_COMMANDS_HPP
#define CONVINV_CLI_COMMANDS_HPP

#include <string>
#include <vector>

#include "cli/report.hpp"

namespace convinv::cli {

inline const std::vector<std::string> kCommands = {
    "decide", "poly", "count", "construct", "classify", "explore", "gen-tournaments", "mc-check"};

Report run(const std::string& command, const std::vector<std::string>& args,
           const RunConfig& base_config = {});

// Full entry point used by main(); prints the rendered report to stdout and
// returns the process exit code.
int run_main(int argc, const char* const* argv);

}  // namespace convinv::cli

#endif
