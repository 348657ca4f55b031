#include "modkit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "modkit/exact.hpp"
#include "modkit/report.hpp"
#include "modkit/rounding.hpp"

namespace modkit::cli {

namespace {

using report::Json;

std::string_view command_name(Command c) {
  switch (c) {
    case Command::solve: return "solve";
    case Command::cut: return "cut";
    case Command::exact: return "exact";
    case Command::bounds: return "bounds";
  }
  return "unknown";
}

Json echo_config(const RunConfig& c) {
  Json j;
  j["command"] = command_name(c.command);
  if (c.command == Command::bounds) {
    j["figure"] = c.figure;
    j["samples"] = c.samples;
    j["k_max"] = c.k_max;
    return j;
  }
  j["input"] = c.input_path;
  j["variant"] = to_string(c.variant);
  if (c.command == Command::exact) {
    j["limit"] = c.limit;
    return j;
  }
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["tol_feas"] = c.solver.tol_feas;
  j["tol_obj"] = c.solver.tol_obj;
  j["max_iters"] = c.solver.max_iters;
  j["penalty"] = c.solver.penalty;
  return j;
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output_path, std::ios::binary);
  if (!f) throw ValidationError("cannot write '" + c.output_path + "'");
  f << text;
}

std::string partition_csv(const Partition& p) {
  std::ostringstream os;
  os << "vertex,cluster\n";
  for (std::size_t v = 0; v < p.size(); ++v) os << v << ',' << p[v] << '\n';
  return os.str();
}

int run_relaxation(const RunConfig& c, std::ostream& out) {
  const Graph g = read_edge_list_file(c.input_path, c.variant);
  const QMatrix qm = build_q(g);

  SolverOptions opts = c.solver;
  opts.record_trace = !c.iterate_log.empty();
  const bool full = c.command == Command::solve;
  const SdpSolution sol = full ? solve_full_sdp(qm, opts) : solve_cut_sdp(qm, opts);
  if (!c.iterate_log.empty()) {
    std::ofstream log(c.iterate_log, std::ios::binary);
    if (!log) throw ValidationError("cannot write '" + c.iterate_log + "'");
    log << report::iterate_log_csv(sol);
  }

  const RoundingResult res =
      full ? round_full(qm, sol, c.trials, c.seed) : round_cut(qm, sol, c.trials, c.seed);

  if (c.format == Format::csv) {
    emit(c, partition_csv(res.best.partition), out);
  } else {
    Json j;
    j["config"] = echo_config(c);
    j.update(report::to_json(res.report));
    j["num_clusters"] = res.best.partition.num_clusters();
    j["partition"] = report::to_json(res.best.partition);
    j["solver"] = report::solver_diagnostics(sol);
    emit(c, report::dump(j) + "\n", out);
  }
  return sol.converged ? kOk : kNotConverged;
}

int run_exact(const RunConfig& c, std::ostream& out) {
  const Graph g = read_edge_list_file(c.input_path, c.variant);
  const QMatrix qm = build_q(g);
  const ExactResult r = exact_full(qm, c.limit == 0 ? kExactFullLimit : c.limit);
  if (c.format == Format::csv) {
    emit(c, partition_csv(r.opt_partition), out);
  } else {
    Json j;
    j["config"] = echo_config(c);
    j.update(report::to_json(r));
    emit(c, report::dump(j) + "\n", out);
  }
  return kOk;
}

int run_bounds(const RunConfig& c, std::ostream& out) {
  if (c.format == Format::csv) {
    emit(c, report::figure_csv(c.figure, c.samples, c.k_max), out);
  } else {
    Json j;
    j["config"] = echo_config(c);
    j.update(report::figure_json(c.figure, c.samples, c.k_max));
    emit(c, report::dump(j) + "\n", out);
  }
  return kOk;
}

}  // namespace

ParseResult parse_args(const std::vector<std::string>& args, std::ostream& out) {
  ParseResult result;
  RunConfig& c = result.config;

  CLI::App app{"modkit: modularity maximization with SDP relaxations and hyperplane rounding"};
  app.require_subcommand(1);

  std::string variant = "undirected";
  std::string format;
  auto add_graph_flags = [&](CLI::App* sub) {
    sub->add_option("-i,--input", c.input_path, "Edge-list file")->required()->check(CLI::ExistingFile);
    sub->add_option("--variant", variant, "undirected | weighted | directed | bipartite")
        ->check(CLI::IsMember({"undirected", "weighted", "directed", "bipartite"}));
    sub->add_option("--format", format, "json (default) or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("-o,--output", c.output_path, "Report file (default stdout)");
  };
  auto add_rounding_flags = [&](CLI::App* sub) {
    sub->add_option("--trials", c.trials, "Rounding trials")->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed, "Master RNG seed");
    sub->add_flag("--entropy", c.entropy, "Draw the seed from the OS instead");
    sub->add_option("--tol-feas", c.solver.tol_feas, "Feasibility tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--tol-obj", c.solver.tol_obj, "Duality-gap tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--max-iters", c.solver.max_iters, "Iteration cap")->check(CLI::PositiveNumber);
    sub->add_option("--penalty", c.solver.penalty, "Initial ADMM penalty")->check(CLI::PositiveNumber);
    sub->add_option("--iterate-log", c.iterate_log, "Write solver iterates as CSV");
  };

  CLI::App* solve = app.add_subcommand("solve", "Full relaxation + Hyperplane(k*) rounding");
  add_graph_flags(solve);
  add_rounding_flags(solve);
  CLI::App* cut = app.add_subcommand("cut", "Cut relaxation + single-hyperplane rounding");
  add_graph_flags(cut);
  add_rounding_flags(cut);
  CLI::App* exact = app.add_subcommand("exact", "Brute-force maximum modularity");
  add_graph_flags(exact);
  exact->add_option("--limit", c.limit, "Largest n to enumerate");
  CLI::App* bounds = app.add_subcommand("bounds", "Bound curves as CSV");
  bounds->add_option("--figure", c.figure, "1..4")->check(CLI::Range(1, 4));
  bounds->add_option("--samples", c.samples, "Rows of output")->check(CLI::Range(2, 10000000));
  bounds->add_option("--k-max", c.k_max, "Hyperplane cap for figure 2")->check(CLI::Range(1, 64));
  bounds->add_option("--format", format, "csv (default) or json")->check(CLI::IsMember({"json", "csv"}));
  bounds->add_option("-o,--output", c.output_path, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    result.help_shown = true;
    return result;
  } catch (const CLI::ParseError& e) {
    throw ValidationError(e.what());
  }

  if (solve->parsed()) c.command = Command::solve;
  if (cut->parsed()) c.command = Command::cut;
  if (exact->parsed()) c.command = Command::exact;
  if (bounds->parsed()) c.command = Command::bounds;
  c.variant = parse_variant(variant);
  if (format.empty()) format = c.command == Command::bounds ? "csv" : "json";
  c.format = format == "csv" ? Format::csv : Format::json;
  if (c.entropy) {
    std::random_device rd;
    c.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  return result;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::solve:
      case Command::cut: {
        const int code = run_relaxation(config, out);
        if (code == kNotConverged)
          err << "warning: solver did not reach the requested tolerance\n";
        return code;
      }
      case Command::exact: return run_exact(config, out);
      case Command::bounds: return run_bounds(config, out);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kValidation;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  ParseResult parsed;
  try {
    parsed = parse_args(args, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return kValidation;
  }
  if (parsed.help_shown) return kOk;
  return run(parsed.config, out, err);
}

}  // namespace modkit::cli
