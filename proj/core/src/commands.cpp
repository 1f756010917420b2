#include "starchrome/commands.hpp"

#include <fstream>
#include <ostream>
#include <regex>

#include "starchrome/errors.hpp"
#include "starchrome/figures.hpp"
#include "starchrome/graph6.hpp"
#include "starchrome/outerplanar.hpp"

namespace starchrome {

using nlohmann::ordered_json;

namespace {

ordered_json edge_rows(const EdgeColoring& c, const std::vector<std::string>* roles = nullptr) {
  ordered_json rows = ordered_json::array();
  const auto& es = c.graph().edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    auto [u, v] = es[i];
    if (roles) rows.push_back({(*roles)[u], (*roles)[v], c.color_at(static_cast<int>(i))});
    else rows.push_back({u, v, c.color_at(static_cast<int>(i))});
  }
  return rows;
}

ordered_json violation_json(const Violation& v, const std::vector<std::string>* roles) {
  ordered_json j;
  j["kind"] = kind_name(v.kind);
  ordered_json vs = ordered_json::array();
  for (int x : v.vertices) {
    if (roles) vs.push_back((*roles)[x]);
    else vs.push_back(x);
  }
  j["vertices"] = vs;
  j["colors"] = v.kind == Violation::Kind::Proper ? ordered_json{v.color_a}
                                                  : ordered_json{v.color_a, v.color_b};
  return j;
}

ordered_json params_json(const FamilyParams& p) {
  ordered_json j = ordered_json::object();
  if (p.n) j["n"] = p.n;
  if (p.delta) j["delta"] = p.delta;
  if (p.blocks) j["blocks"] = p.blocks;
  return j;
}

double ms(std::chrono::duration<double> d) { return d.count() * 1000.0; }

}  // namespace

Graph resolve_graph(const GraphSpec& spec) {
  const bool has_g6 = !spec.g6.empty(), has_family = !spec.family.empty();
  if (has_g6 == has_family) throw BadParams("give exactly one of --g6 or --family");
  if (has_g6) return graph6_decode(spec.g6);
  return build_family(parse_family(spec.family), spec.params).graph;
}

std::pair<int, int> parse_delta_range(const std::string& text) {
  static const std::regex re(R"(\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw BadParams("bad Delta range '" + text + "', expected A..B");
  int lo = std::stoi(m[1]);
  int hi = m[2].matched ? std::stoi(m[2]) : lo;
  if (hi < lo) throw BadParams("empty Delta range '" + text + "'");
  return {lo, hi};
}

int cmd_solve(const SolveCommand& cmd, std::ostream& out, std::ostream& err) {
  Graph g;
  std::optional<FamilyInstance> inst;
  try {
    if (!cmd.input.family.empty() && cmd.input.g6.empty()) {
      inst = build_family(parse_family(cmd.input.family), cmd.input.params);
      g = inst->graph;
    } else {
      g = resolve_graph(cmd.input);
    }
  } catch (const std::exception& e) {
    err << "solve: " << e.what() << '\n';
    return kExitInputError;
  }
  ordered_json j;
  j["graph6"] = g.order() <= 62 ? ordered_json(graph6_encode(g)) : ordered_json(nullptr);
  j["n"] = g.order();
  j["m"] = g.size();
  j["delta"] = g.max_degree();
  try {
    SolveResult r = exact_chi_star(g, cmd.solve);
    j["status"] = "exact";
    j["chi"] = r.chi;
    j["witness"] = edge_rows(r.witness, inst ? &inst->role_of : nullptr);
    j["nodes"] = r.nodes_expanded;
    j["elapsed_ms"] = ms(r.elapsed);
    out << j.dump() << '\n';
    return kExitOk;
  } catch (const BudgetExhausted& e) {
    j["status"] = "budget_exhausted";
    j["chi_lower"] = e.lower();
    j["chi_upper"] = e.upper();
    out << j.dump() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "solve: " << e.what() << '\n';
    return kExitInputError;
  }
}

int cmd_verify_figures(const std::filesystem::path& data_dir, std::ostream& out, std::ostream& err) {
  int passed = 0, findings = 0;
  for (const auto& id : figure_catalog()) {
    FigureColoring fc;
    try {
      fc = figure_coloring(id, data_dir);
    } catch (const std::exception& e) {
      err << "verify-figures: " << id << ": " << e.what() << '\n';
      return kExitInputError;
    }
    const auto violations = star_violations(fc.coloring);
    const int palette = fc.coloring.palette_size();
    const bool ok = violations.empty() && palette == fc.table.claimed_palette;
    ordered_json j;
    j["figure"] = id;
    j["family"] = family_name(fc.table.family);
    j["params"] = params_json(fc.table.params);
    j["n"] = fc.instance.graph.order();
    j["m"] = fc.instance.graph.size();
    j["status"] = ok ? "PASS" : "FAIL";
    j["palette"] = palette;
    j["claimed_palette"] = fc.table.claimed_palette;
    j["violations"] = violations.size();
    j["witness"] = violations.empty() ? ordered_json(nullptr)
                                      : violation_json(violations.front(), &fc.instance.role_of);
    out << j.dump() << '\n';
    ok ? ++passed : ++findings;
  }
  ordered_json s;
  s["summary"] = "verify-figures";
  s["figures"] = figure_catalog().size();
  s["passed"] = passed;
  s["findings"] = findings;
  out << s.dump() << '\n';
  return kExitOk;
}

namespace {

// Coloring for one family member: the closed form where it applies, else a
// figure table drawn for that Delta.
std::optional<std::pair<std::string, EdgeColoring>> coloring_source(FamilyId id, int delta,
                                                                    const std::filesystem::path& dir) {
  if (auto lo = formula_min_delta(id); lo && delta >= *lo)
    return std::pair{std::string("formula"), paper_coloring(id, {0, delta, 0})};
  for (const auto& fig : figure_catalog()) {
    FigureTable t = load_figure_table(fig, dir);
    if (t.family == id && t.params.delta == delta) {
      EdgeColoring c = coloring_from_roles(build_family(id, t.params), t.rows);
      return std::pair{"figure:" + fig, std::move(c)};
    }
  }
  return std::nullopt;
}

}  // namespace

int cmd_family_check(const FamilyCheckCommand& cmd, std::ostream& out, std::ostream& err) {
  FamilyId id;
  std::vector<std::pair<std::string, EdgeColoring>> rows;
  const auto dir = cmd.data_dir.empty() ? default_data_dir() : cmd.data_dir;
  try {
    id = parse_family(cmd.family);
    for (int d = cmd.delta_lo; d <= cmd.delta_hi; ++d) {
      auto src = coloring_source(id, d, dir);
      if (!src)
        throw OutOfRange(std::string("no coloring of ") + family_name(id) + " at Delta=" + std::to_string(d));
      rows.push_back(std::move(*src));
    }
  } catch (const std::exception& e) {
    err << "family-check: " << e.what() << '\n';
    return kExitInputError;
  }
  int failures = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int d = cmd.delta_lo + static_cast<int>(i);
    const auto& [source, coloring] = rows[i];
    const FamilyInstance inst = build_family(id, {0, d, 0});
    const auto violations = star_violations(coloring);
    const int palette = coloring.palette_size();
    std::optional<int> claimed;
    if (source == "formula") claimed = claimed_palette(id, d);
    else claimed = load_figure_table(source.substr(7), dir).claimed_palette;
    const bool ok = violations.empty() && palette == *claimed;
    if (!ok) ++failures;

    ordered_json j;
    j["family"] = family_name(id);
    j["delta"] = d;
    j["n"] = inst.graph.order();
    j["m"] = inst.graph.size();
    j["source"] = source;
    j["status"] = ok ? "PASS" : "FAIL";
    j["palette"] = palette;
    j["claimed_palette"] = *claimed;
    j["violations"] = violations.size();
    j["witness"] = violations.empty() ? ordered_json(nullptr) : violation_json(violations.front(), &inst.role_of);
    const auto bounds = claimed_bounds(id, d);
    j["claimed_bounds"] = bounds ? ordered_json{bounds->first, bounds->second} : ordered_json(nullptr);
    if (cmd.exact) {
      try {
        SolveResult r = exact_chi_star(inst.graph, cmd.solve);
        j["exact_chi"] = r.chi;
        j["exact_nodes"] = r.nodes_expanded;
        j["exact_elapsed_ms"] = ms(r.elapsed);
        if (bounds) {
          j["within_claimed_bounds"] = bounds->first <= r.chi && r.chi <= bounds->second;
          j["gap_to_claimed_upper"] = bounds->second - r.chi;
        }
      } catch (const BudgetExhausted& e) {
        j["exact_chi"] = nullptr;
        j["exact_interval"] = {e.lower(), e.upper()};
      } catch (const TooLarge& e) {
        j["exact_chi"] = nullptr;
        j["exact_skipped"] = e.what();
      }
    }
    out << j.dump() << '\n';
  }
  ordered_json s;
  s["summary"] = "family-check";
  s["family"] = family_name(id);
  s["rows"] = rows.size();
  s["failures"] = failures;
  out << s.dump() << '\n';
  return kExitOk;
}

int cmd_sweep(const SweepCommand& cmd, std::ostream& out, std::ostream& err) {
  std::optional<ResultCache> cache;
  std::ofstream file;
  std::ostream* sink = &out;
  try {
    if (cmd.sweep.n_max > kDefaultEnumerationLimit)
      throw TooLarge("sweep n_max above " + std::to_string(kDefaultEnumerationLimit));
    if (cmd.use_cache) cache.emplace(cmd.cache ? *cmd.cache : ResultCache::default_path());
    if (cmd.out) {
      file.open(*cmd.out);
      if (!file) throw IoError("cannot write " + cmd.out->string());
      sink = &file;
    }
  } catch (const std::exception& e) {
    err << "sweep: " << e.what() << '\n';
    return kExitInputError;
  }
  SweepSummary sum;
  try {
    sum = run_sweep(cmd.sweep, cache ? &*cache : nullptr,
                    [&](const SweepRecord& r) { *sink << to_json(r).dump() << '\n'; });
  } catch (const std::exception& e) {
    err << "sweep: " << e.what() << '\n';
    return kExitInputError;
  }
  for (const auto& f : sum.hard_failures) *sink << to_json(f).dump() << '\n';
  for (const auto& f : sum.conjecture_findings) *sink << to_json(f).dump() << '\n';
  ordered_json s;
  s["summary"] = "sweep";
  s["n_min"] = cmd.sweep.n_min;
  s["n_max"] = cmd.sweep.n_max;
  s["records"] = sum.records;
  s["cached"] = sum.cached;
  s["budget_exhausted"] = sum.budget_exhausted;
  s["hard_failures"] = sum.hard_failures.size();
  s["conjecture_findings"] = sum.conjecture_findings.size();
  *sink << s.dump() << '\n';
  if (sink != &out) out << s.dump() << '\n';
  return sum.hard_failures.empty() ? kExitOk : kExitFindings;
}

int cmd_encode(const GraphSpec& input, std::ostream& out, std::ostream& err) {
  try {
    out << graph6_encode(resolve_graph(input)) << '\n';
    return kExitOk;
  } catch (const std::exception& e) {
    err << "encode: " << e.what() << '\n';
    return kExitInputError;
  }
}

int cmd_decode(const std::string& g6, std::ostream& out, std::ostream& err) {
  try {
    Graph g = graph6_decode(g6);
    ordered_json j;
    j["n"] = g.order();
    j["m"] = g.size();
    ordered_json es = ordered_json::array();
    for (auto [u, v] : g.edges()) es.push_back({u, v});
    j["edges"] = es;
    out << j.dump() << '\n';
    return kExitOk;
  } catch (const std::exception& e) {
    err << "decode: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace starchrome
