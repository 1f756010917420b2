#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "starchrome/families.hpp"
#include "starchrome/star_color.hpp"

namespace starchrome {

// One transcribed drawing: data/figures/<id>.txt.
//
//   # comment
//   format starchrome-figure 1
//   figure fig8a
//   family H-prime
//   delta 5            (or: n 6, blocks 10)
//   claimed_palette 9
//   symbol a 7         (optional letter -> color id)
//   edge v0 v4 3
struct FigureTable {
  std::string id;
  FamilyId family = FamilyId::Path;
  FamilyParams params;
  int claimed_palette = 0;
  std::vector<RoleColor> rows;
};

struct FigureColoring {
  FigureTable table;
  FamilyInstance instance;
  EdgeColoring coloring;
};

// Every cataloged figure id, in drawing order.
const std::vector<std::string>& figure_catalog();

// $STARCHROME_DATA, else the source tree's data/, else the install prefix.
std::filesystem::path default_data_dir();

FigureTable parse_figure_table(const std::string& text);
FigureTable load_figure_table(const std::string& figure_id,
                              const std::filesystem::path& data_dir = default_data_dir());

// Throws UnknownFigure for ids outside the catalog.
FigureColoring figure_coloring(const std::string& figure_id,
                               const std::filesystem::path& data_dir = default_data_dir());

}  // namespace starchrome
