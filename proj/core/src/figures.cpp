#include "starchrome/figures.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "starchrome/errors.hpp"

namespace starchrome {

const std::vector<std::string>& figure_catalog() {
  static const std::vector<std::string> ids = {
      "fig1",   "fig2",   "fig3-left", "fig3-right", "fig8a",  "fig8b",  "fig8c",
      "fig8d",  "fig8e",  "fig10a",    "fig10b",     "fig10c", "fig10d", "fig11a",
      "fig11b", "fig11c", "fig11d",    "fig11e",     "fig11f", "fig11g", "fig12"};
  return ids;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("STARCHROME_DATA"); env && *env) return env;
#ifdef STARCHROME_SOURCE_DATA_DIR
  if (std::filesystem::exists(STARCHROME_SOURCE_DATA_DIR)) return STARCHROME_SOURCE_DATA_DIR;
#endif
#ifdef STARCHROME_INSTALL_DATA_DIR
  return STARCHROME_INSTALL_DATA_DIR;
#else
  return "data";
#endif
}

FigureTable parse_figure_table(const std::string& text) {
  FigureTable t;
  std::map<std::string, int> symbols;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool saw_format = false;
  auto fail = [&](const std::string& why) {
    return MalformedText("figure table line " + std::to_string(lineno) + ": " + why);
  };
  auto to_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      int x = std::stoi(s, &used);
      if (used != s.size()) throw fail("not an integer: " + s);
      return x;
    } catch (const std::logic_error&) {
      throw fail("not an integer: " + s);
    }
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    auto arity = [&](std::size_t k) {
      if (tok.size() != k + 1) throw fail("'" + kw + "' takes " + std::to_string(k) + " fields");
    };
    if (kw == "format") {
      arity(2);
      if (tok[1] != "starchrome-figure" || tok[2] != "1") throw fail("unsupported format");
      saw_format = true;
    } else if (kw == "figure") {
      arity(1);
      t.id = tok[1];
    } else if (kw == "family") {
      arity(1);
      try {
        t.family = parse_family(tok[1]);
      } catch (const BadParams& e) {
        throw fail(e.what());
      }
    } else if (kw == "delta") {
      arity(1);
      t.params.delta = to_int(tok[1]);
    } else if (kw == "n") {
      arity(1);
      t.params.n = to_int(tok[1]);
    } else if (kw == "blocks") {
      arity(1);
      t.params.blocks = to_int(tok[1]);
    } else if (kw == "claimed_palette") {
      arity(1);
      t.claimed_palette = to_int(tok[1]);
    } else if (kw == "symbol") {
      arity(2);
      symbols[tok[1]] = to_int(tok[2]);
    } else if (kw == "edge") {
      arity(3);
      auto s = symbols.find(tok[3]);
      int color = s != symbols.end() ? s->second : to_int(tok[3]);
      if (color < 1) throw fail("color ids start at 1");
      t.rows.push_back({tok[1], tok[2], color});
    } else {
      throw fail("unknown keyword '" + kw + "'");
    }
  }
  if (!saw_format) throw MalformedText("figure table lacks a format line");
  if (t.id.empty()) throw MalformedText("figure table lacks a figure line");
  return t;
}

FigureTable load_figure_table(const std::string& figure_id, const std::filesystem::path& data_dir) {
  const auto& cat = figure_catalog();
  if (std::find(cat.begin(), cat.end(), figure_id) == cat.end())
    throw UnknownFigure("unknown figure '" + figure_id + "'");
  const auto path = data_dir / "figures" / (figure_id + ".txt");
  std::ifstream f(path);
  if (!f) throw IoError("cannot open figure table " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  FigureTable t = parse_figure_table(ss.str());
  if (t.id != figure_id) throw MalformedText(path.string() + " describes " + t.id);
  return t;
}

FigureColoring figure_coloring(const std::string& figure_id, const std::filesystem::path& data_dir) {
  FigureTable t = load_figure_table(figure_id, data_dir);
  FamilyInstance inst = build_family(t.family, t.params);
  EdgeColoring c = coloring_from_roles(inst, t.rows);
  return {std::move(t), std::move(inst), std::move(c)};
}

}  // namespace starchrome
