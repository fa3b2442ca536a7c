#pragma once
// Command-line front end.  Every subcommand prints one JSON document (or a
// plain-text table where supported) to stdout and diagnostics to stderr.
// Exit codes: 0 success, 1 domain error (unknown table row, impossible
// request, failed replay), 2 usage error (unknown flag or subcommand,
// missing required option).
#include <iosfwd>
#include <string>
#include <vector>

namespace sodlab {

// One dispatch-table row; `name` is the full subcommand path ("links expand")
// and `modules` lists the library components the command drives.
struct CliCommand {
  std::string name;
  std::string summary;
  std::vector<std::string> modules;
};

const std::vector<CliCommand>& cli_commands();

// Runs one invocation; `args` excludes the program name.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace sodlab
