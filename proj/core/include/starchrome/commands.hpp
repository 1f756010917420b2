#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "starchrome/families.hpp"
#include "starchrome/star_color.hpp"
#include "starchrome/sweep.hpp"

namespace starchrome {

// Exit codes shared by the subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitBudget = 2;
// sweep: a proven bound was broken by some record
inline constexpr int kExitFindings = 3;

struct GraphSpec {
  std::string g6;      // either a graph6 string
  std::string family;  // or a family name with params
  FamilyParams params;
};

// Resolves a GraphSpec; throws BadParams when neither or both are given.
Graph resolve_graph(const GraphSpec& spec);

// "9..12" or "9" -> inclusive range.
std::pair<int, int> parse_delta_range(const std::string& text);

struct SolveCommand {
  GraphSpec input;
  SolveOptions solve;
};

struct FamilyCheckCommand {
  std::string family;
  int delta_lo = 0;
  int delta_hi = 0;
  bool exact = false;
  SolveOptions solve;
  std::filesystem::path data_dir;
};

struct SweepCommand {
  SweepOptions sweep;
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> cache;  // default: ResultCache::default_path()
  bool use_cache = true;
};

// Each prints JSON lines on `out`, diagnostics on `err`, and returns the
// process exit code.
int cmd_solve(const SolveCommand& cmd, std::ostream& out, std::ostream& err);
int cmd_verify_figures(const std::filesystem::path& data_dir, std::ostream& out, std::ostream& err);
int cmd_family_check(const FamilyCheckCommand& cmd, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepCommand& cmd, std::ostream& out, std::ostream& err);
int cmd_encode(const GraphSpec& input, std::ostream& out, std::ostream& err);
int cmd_decode(const std::string& g6, std::ostream& out, std::ostream& err);

}  // namespace starchrome
