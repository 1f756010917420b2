#include <algorithm>
#include <bit>
#include <queue>
#include <random>

#include "starchrome/errors.hpp"
#include "starchrome/star_color.hpp"

namespace starchrome {
namespace {

using Clock = std::chrono::steady_clock;

// at(v, c) is the neighbor joined to v by the edge of color c, or -1.
// All checks assume the partial coloring is proper.
class ColorTable {
 public:
  ColorTable(int n, int k) : k_(k), at_(static_cast<std::size_t>(n) * (k + 1), -1) {}

  int at(int v, int c) const { return at_[static_cast<std::size_t>(v) * (k_ + 1) + c]; }
  void place(int u, int v, int c) {
    slot(u, c) = v;
    slot(v, c) = u;
  }
  void clear(int u, int v, int c) {
    slot(u, c) = -1;
    slot(v, c) = -1;
  }

  // Would coloring uv with a close an a/b alternating walk of four edges?
  bool admissible(int u, int v, int a) const {
    if (at(u, a) >= 0 || at(v, a) >= 0) return false;
    for (int b = 1; b <= k_; ++b) {
      if (b == a) continue;
      const int x = at(u, b), y = at(v, b);
      // uv in the middle: x -b- u -a- v -b- y, extended by an a-edge
      if (x >= 0 && y >= 0 && (at(x, a) >= 0 || at(y, a) >= 0)) return false;
      // uv at an end: u -a- v -b- y -a- p3 -b- ..., and mirrored
      if (y >= 0) {
        const int p3 = at(y, a);
        if (p3 >= 0 && at(p3, b) >= 0) return false;
      }
      if (x >= 0) {
        const int p3 = at(x, a);
        if (p3 >= 0 && at(p3, b) >= 0) return false;
      }
    }
    return true;
  }

 private:
  int& slot(int v, int c) { return at_[static_cast<std::size_t>(v) * (k_ + 1) + c]; }
  int k_;
  std::vector<int> at_;
};

// BFS from a maximum-degree vertex (smallest id on ties); each vertex emits
// its not-yet-listed edges in neighbor order.
std::vector<int> hub_first_order(const Graph& g) {
  std::vector<int> order;
  std::vector<char> seen_v(g.order(), 0), seen_e(g.size(), 0);
  while (static_cast<int>(order.size()) < g.size()) {
    int root = -1;
    for (int v = 0; v < g.order(); ++v)
      if (!seen_v[v] && g.degree(v) > 0 && (root < 0 || g.degree(v) > g.degree(root))) root = v;
    std::queue<int> q;
    q.push(root);
    seen_v[root] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        int e = g.edge_index(u, w);
        if (!seen_e[e]) {
          seen_e[e] = 1;
          order.push_back(e);
        }
        if (!seen_v[w]) {
          seen_v[w] = 1;
          q.push(w);
        }
      }
    }
  }
  return order;
}

class PaletteSearch {
 public:
  PaletteSearch(const Graph& g, int k, const std::vector<int>& order, std::uint64_t node_cap,
                Clock::time_point deadline)
      : g_(g), k_(k), order_(order), table_(g.order(), k), used_(g.order(), 0),
        colors_(g.size(), 0), incident_(g.order()), node_cap_(node_cap), deadline_(deadline) {
    for (int e = 0; e < g.size(); ++e) {
      incident_[g.edges()[e].first].push_back(e);
      incident_[g.edges()[e].second].push_back(e);
    }
  }

  Feasibility run() {
    try {
      return dfs(0, 0) ? Feasibility::Feasible : Feasibility::Infeasible;
    } catch (const Stop&) {
      return Feasibility::Unknown;
    }
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<int>& colors() const { return colors_; }

 private:
  struct Stop {};

  bool dfs(std::size_t i, int max_used) {
    if (i == order_.size()) return true;
    if (++nodes_ > node_cap_) throw Stop{};
    if ((nodes_ & 1023) == 0 && Clock::now() > deadline_) throw Stop{};
    const int e = order_[i];
    const auto [u, v] = g_.edges()[e];
    const int top = std::min(k_, max_used + 1);
    for (int a = 1; a <= top; ++a) {
      if (!table_.admissible(u, v, a)) continue;
      table_.place(u, v, a);
      used_[u] |= bit(a);
      used_[v] |= bit(a);
      colors_[e] = a;
      if (neighbors_have_room(u, v) && dfs(i + 1, std::max(max_used, a))) return true;
      colors_[e] = 0;
      used_[u] &= ~bit(a);
      used_[v] &= ~bit(a);
      table_.clear(u, v, a);
    }
    return false;
  }

  // Every uncolored edge at u or v still has a color free at both ends.
  bool neighbors_have_room(int u, int v) const {
    for (int x : {u, v})
      for (int e : incident_[x]) {
        if (colors_[e]) continue;
        auto [p, q] = g_.edges()[e];
        if (std::popcount(used_[p] | used_[q]) >= k_) return false;
      }
    return true;
  }

  static std::uint64_t bit(int c) { return std::uint64_t{1} << c; }

  const Graph& g_;
  int k_;
  const std::vector<int>& order_;
  ColorTable table_;
  std::vector<std::uint64_t> used_;
  std::vector<int> colors_;
  std::vector<std::vector<int>> incident_;
  std::uint64_t node_cap_;
  Clock::time_point deadline_;
  std::uint64_t nodes_ = 0;
};

Clock::time_point deadline_after(double seconds) {
  auto d = std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
  return Clock::now() + d;
}

}  // namespace

PaletteResult try_palette(const Graph& g, int k, const Budget& budget) {
  if (k > 62) throw TooLarge("palette search supports at most 62 colors");
  PaletteResult r;
  if (g.size() == 0) {
    r.status = Feasibility::Feasible;
    r.witness = EdgeColoring(g);
    return r;
  }
  if (k < 1) {
    r.status = Feasibility::Infeasible;
    return r;
  }
  const auto order = hub_first_order(g);
  PaletteSearch s(g, k, order, budget.max_nodes, deadline_after(budget.max_seconds));
  r.status = s.run();
  r.nodes_expanded = s.nodes();
  if (r.status == Feasibility::Feasible) r.witness = EdgeColoring(g, s.colors());
  return r;
}

SolveResult exact_chi_star(const Graph& g, const SolveOptions& opts) {
  if (g.size() > opts.max_edges)
    throw TooLarge("exact solver limited to " + std::to_string(opts.max_edges) + " edges, got " +
                   std::to_string(g.size()));
  const auto start = Clock::now();
  SolveResult res;
  if (g.size() == 0) {
    res.witness = EdgeColoring(g);
    return res;
  }
  const int upper = greedy_star_upper(g, 0).palette_size();
  const auto order = hub_first_order(g);
  const auto deadline = deadline_after(opts.budget.max_seconds);
  for (int k = g.max_degree(); k <= upper; ++k) {
    const std::uint64_t left =
        opts.budget.max_nodes > res.nodes_expanded ? opts.budget.max_nodes - res.nodes_expanded : 0;
    PaletteSearch s(g, k, order, left, deadline);
    Feasibility f = s.run();
    res.nodes_expanded += s.nodes();
    if (f == Feasibility::Unknown) throw BudgetExhausted(k, upper);
    if (f == Feasibility::Feasible) {
      res.chi = k;
      res.witness = EdgeColoring(g, s.colors());
      res.elapsed = Clock::now() - start;
      return res;
    }
  }
  // greedy's palette is always feasible, so the loop returns before here
  throw PostconditionFailed("palette search refuted the greedy upper bound");
}

EdgeColoring greedy_star_upper(const Graph& g, std::uint64_t order_seed) {
  std::mt19937_64 rng(order_seed);
  std::vector<int> order;
  std::vector<char> seen_v(g.order(), 0), seen_e(g.size(), 0);
  std::vector<int> roots(g.order());
  for (int v = 0; v < g.order(); ++v) roots[v] = v;
  std::shuffle(roots.begin(), roots.end(), rng);
  for (int root : roots) {
    if (seen_v[root]) continue;
    std::queue<int> q;
    q.push(root);
    seen_v[root] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      auto nb = g.neighbors(u);
      std::shuffle(nb.begin(), nb.end(), rng);
      for (int w : nb) {
        int e = g.edge_index(u, w);
        if (!seen_e[e]) {
          seen_e[e] = 1;
          order.push_back(e);
        }
        if (!seen_v[w]) {
          seen_v[w] = 1;
          q.push(w);
        }
      }
    }
  }
  // m colors always suffice: a rainbow coloring has no bichromatic walk
  const int cap = std::max(1, g.size());
  ColorTable table(g.order(), cap);
  EdgeColoring out(g);
  for (int e : order) {
    auto [u, v] = g.edges()[e];
    int a = 1;
    while (!table.admissible(u, v, a)) ++a;
    table.place(u, v, a);
    out.set_at(e, a);
  }
  return out;
}

}  // namespace starchrome
