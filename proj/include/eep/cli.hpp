#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace eep {

enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitVerificationFailure = 2 };

struct Command {
  std::string verb;  // compute | specialize | eval | verify | atlas

  // Graph input: a file path ("-" for stdin) or inline text with ';' as line break.
  std::string input_path;
  std::string inline_graph;
  std::string input_format = "edge-list";

  std::string output_format = "text";  // text | structured
  unsigned threads = 1;
  std::size_t cache_size = 0;  // 0: unbounded
  bool canonicalize = true;

  std::string method = "recurrence";  // compute: recurrence | expansion
  std::string poly;                   // specialize
  std::map<std::string, std::string> bindings;  // eval: x, y, z, t_<label>

  std::string suite = "all";  // verify
  std::size_t max_vertices = 5;
  std::size_t trials = 50;
  std::uint64_t seed = 20090801;

  std::string family = "trees";  // atlas: trees | graphs
  std::string search = "collisions";  // collisions | oq2
  std::size_t min_n = 1;
  std::size_t max_n = 12;
  std::size_t graph_n = 5;
  std::size_t m_max = 10;
};

/// Parses argv into a Command. On --help or a usage error the message goes to
/// `out` / `err` and the exit code is returned instead.
struct ParsedCommand {
  std::optional<Command> command;
  int exit_code = kExitOk;
};
ParsedCommand parse_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Executes a validated command. Output is assembled completely before it is
/// written, and does not depend on `threads`.
int run(const Command& command, std::ostream& out, std::ostream& err);

/// parse_command followed by run.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eep
