#include <CLI11.hpp>
#include <iostream>

#include "starchrome/commands.hpp"
#include "starchrome/figures.hpp"

using namespace starchrome;

namespace {

void add_graph_flags(CLI::App* cmd, GraphSpec& spec) {
  cmd->add_option("--g6", spec.g6, "input graph in graph6");
  cmd->add_option("--family", spec.family, "family name (path, cycle, fan, G61, H-prime, ...)");
  cmd->add_option("--n", spec.params.n, "vertex count for path, cycle, fan");
  cmd->add_option("--delta", spec.params.delta, "maximum degree for the Delta-indexed families");
  cmd->add_option("--blocks", spec.params.blocks, "block count for the strip");
}

void add_budget_flags(CLI::App* cmd, SolveOptions& opts) {
  cmd->add_option("--budget-nodes", opts.budget.max_nodes, "search node budget")->capture_default_str();
  cmd->add_option("--budget-secs", opts.budget.max_seconds, "search time budget in seconds")
      ->capture_default_str();
  cmd->add_option("--max-edges", opts.max_edges, "refuse graphs with more edges")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"starchrome: star edge colorings of outerplanar graphs"};
  app.require_subcommand(1);

  SolveCommand solve;
  auto* solve_cmd = app.add_subcommand("solve", "exact star chromatic index of one graph");
  add_graph_flags(solve_cmd, solve.input);
  add_budget_flags(solve_cmd, solve.solve);

  std::string data_dir;
  auto* verify_cmd = app.add_subcommand("verify-figures", "validate every transcribed figure coloring");
  verify_cmd->add_option("--data", data_dir, "data directory holding figures/");

  FamilyCheckCommand check;
  std::string range;
  auto* check_cmd = app.add_subcommand("family-check", "validate a family's coloring over a Delta range");
  check_cmd->add_option("family", check.family, "family name")->required();
  check_cmd->add_option("deltas", range, "Delta or Delta range, e.g. 9..12")->required();
  check_cmd->add_flag("--exact", check.exact, "also run the exact solver");
  check_cmd->add_option("--data", data_dir, "data directory holding figures/");
  add_budget_flags(check_cmd, check.solve);

  SweepCommand sweep;
  std::string out_path, cache_path;
  bool no_cache = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "solve every maximal outerplanar graph up to n_max");
  sweep_cmd->add_option("--n", sweep.sweep.n_max, "largest order")->capture_default_str();
  sweep_cmd->add_option("--n-min", sweep.sweep.n_min, "smallest order")->capture_default_str();
  sweep_cmd->add_flag("--expand-subgraphs", sweep.sweep.expand_subgraphs,
                      "also solve the 2-connected chord-deletion subgraphs");
  sweep_cmd->add_option("--cap", sweep.sweep.per_n_cap, "instances per order (0 = all)");
  sweep_cmd->add_option("--workers", sweep.sweep.workers, "solver threads (0 = all cores)");
  sweep_cmd->add_option("--out", out_path, "write JSON lines here instead of stdout");
  sweep_cmd->add_option("--cache", cache_path, "result cache (default $STARCHROME_CACHE)");
  sweep_cmd->add_flag("--no-cache", no_cache, "do not read or write the result cache");
  add_budget_flags(sweep_cmd, sweep.sweep.solve);

  GraphSpec encode;
  auto* encode_cmd = app.add_subcommand("encode", "print a family member in graph6");
  add_graph_flags(encode_cmd, encode);

  std::string decode;
  auto* decode_cmd = app.add_subcommand("decode", "print a graph6 string as an edge list");
  decode_cmd->add_option("g6", decode, "graph6 text")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInputError;
  }

  const auto dir = data_dir.empty() ? default_data_dir() : std::filesystem::path(data_dir);
  if (*solve_cmd) return cmd_solve(solve, std::cout, std::cerr);
  if (*verify_cmd) return cmd_verify_figures(dir, std::cout, std::cerr);
  if (*check_cmd) {
    try {
      std::tie(check.delta_lo, check.delta_hi) = parse_delta_range(range);
    } catch (const std::exception& e) {
      std::cerr << "family-check: " << e.what() << '\n';
      return kExitInputError;
    }
    check.data_dir = dir;
    return cmd_family_check(check, std::cout, std::cerr);
  }
  if (*sweep_cmd) {
    if (!out_path.empty()) sweep.out = out_path;
    if (!cache_path.empty()) sweep.cache = cache_path;
    sweep.use_cache = !no_cache;
    return cmd_sweep(sweep, std::cout, std::cerr);
  }
  if (*encode_cmd) return cmd_encode(encode, std::cout, std::cerr);
  if (*decode_cmd) return cmd_decode(decode, std::cout, std::cerr);
  return kExitInputError;
}
