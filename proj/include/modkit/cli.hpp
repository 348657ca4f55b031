#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "modkit/graph.hpp"
#include "modkit/sdp.hpp"

namespace modkit::cli {

enum class Command { solve, cut, exact, bounds };
enum class Format { json, csv };

enum ExitCode : int { kOk = 0, kValidation = 2, kNotConverged = 3 };

struct RunConfig {
  Command command = Command::solve;
  std::string input_path;
  Variant variant = Variant::undirected;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  bool entropy = false;
  SolverOptions solver;
  Format format = Format::json;
  std::string output_path;  ///< empty: stdout
  std::string iterate_log;  ///< empty: no log
  int figure = 1;
  std::size_t samples = 1000;
  int k_max = 64;
  std::size_t limit = 0;  ///< 0: the oracle's default limit
};

struct ParseResult {
  RunConfig config;
  bool help_shown = false;
};
/// Parses the arguments after the program name. Throws ValidationError on
/// bad flags; with --help the help text goes to `out` and `help_shown` is set.
ParseResult parse_args(const std::vector<std::string>& args, std::ostream& out);

/// Executes one command; writes the report to config.output_path (or `out`).
/// Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with usage errors mapped to exit code 2.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace modkit::cli
