#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starchrome/graph.hpp"

namespace starchrome {

// Edge -> color id (>= 1). 0 marks an uncolored edge; a coloring with any
// 0 left is partial and rejected by the validators.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  explicit EdgeColoring(Graph g) : graph_(std::move(g)), colors_(graph_.size(), 0) {}
  EdgeColoring(Graph g, std::vector<int> colors_by_edge_index);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<int>& colors() const noexcept { return colors_; }

  int color(int u, int v) const;
  int color_at(int edge_index) const { return colors_[edge_index]; }
  void set(int u, int v, int c);
  void set_at(int edge_index, int c);

  bool is_total() const;
  // Largest color id used.
  int palette_size() const;
  int distinct_colors() const;

  friend bool operator==(const EdgeColoring& a, const EdgeColoring& b) {
    return a.graph_ == b.graph_ && a.colors_ == b.colors_;
  }

 private:
  Graph graph_;
  std::vector<int> colors_;
};

struct Violation {
  enum class Kind { Proper, StarPath, StarCycle };
  Kind kind = Kind::Proper;
  // Proper: x-y-z (two edges at y). StarPath: 5 vertices. StarCycle: 4
  // vertices, the closing edge back to the first is implied.
  std::vector<int> vertices;
  int color_a = 0;
  int color_b = 0;

  std::vector<Edge> edges() const;
  std::string describe() const;
};

const char* kind_name(Violation::Kind k);

bool is_proper(const EdgeColoring& c);
std::vector<Violation> star_violations(const EdgeColoring& c);
inline bool is_star(const EdgeColoring& c) { return star_violations(c).empty(); }

struct Budget {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 300.0;
};

struct SolveOptions {
  Budget budget;
  int max_edges = 40;
};

struct SolveResult {
  int chi = 0;
  EdgeColoring witness;
  std::uint64_t nodes_expanded = 0;
  std::chrono::duration<double> elapsed{0};
};

// Least k with a star k-edge coloring, by iterative deepening on k from the
// maximum degree. Throws BudgetExhausted or TooLarge.
SolveResult exact_chi_star(const Graph& g, const SolveOptions& opts = {});

enum class Feasibility { Feasible, Infeasible, Unknown };

struct PaletteResult {
  Feasibility status = Feasibility::Unknown;
  std::optional<EdgeColoring> witness;
  std::uint64_t nodes_expanded = 0;
};

// Single-palette decision with the same search as exact_chi_star.
PaletteResult try_palette(const Graph& g, int k, const Budget& budget = {});

// Exhaustive oracle over first-use colorings, |E| <= 9.
int brute_force_chi_star(const Graph& g);

// Randomized BFS order, smallest admissible color per edge.
EdgeColoring greedy_star_upper(const Graph& g, std::uint64_t order_seed);

}  // namespace starchrome
