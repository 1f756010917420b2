#include <algorithm>
#include <set>

#include "starchrome/errors.hpp"
#include "starchrome/outerplanar.hpp"

namespace starchrome {
namespace {

// Merge v into u and drop v, keeping the graph simple.
Graph contract(const Graph& g, int u, int v) {
  std::vector<int> id(g.order());
  for (int x = 0, next = 0; x < g.order(); ++x) id[x] = (x == v) ? -1 : next++;
  id[v] = id[u];
  std::set<Edge> es;
  for (auto [a, b] : g.edges()) {
    int x = id[a], y = id[b];
    if (x != y) es.emplace(std::min(x, y), std::max(x, y));
  }
  return Graph::from_edges(g.order() - 1, {es.begin(), es.end()});
}

Graph drop_vertex(const Graph& g, int v) {
  std::vector<Edge> es;
  for (auto [a, b] : g.edges())
    if (a != v && b != v) es.emplace_back(a - (a > v), b - (b > v));
  return Graph::from_edges(g.order() - 1, es);
}

class MinorSearch {
 public:
  MinorSearch(const Graph& h, int limit) : h_(h), limit_(limit), hkey_(canonical_key(h, limit)) {
    min_deg_ = h.order() ? h.order() : 0;
    for (int v = 0; v < h.order(); ++v) min_deg_ = std::min(min_deg_, h.degree(v));
  }

  bool run(Graph g) {
    g = reduce(std::move(g));
    if (g.order() < h_.order() || g.size() < h_.size()) return false;
    std::string key = canonical_key(g, limit_);
    if (g.order() == h_.order() && g.size() == h_.size()) return key == hkey_;
    if (failed_.count(key)) return false;
    for (auto [u, v] : g.edges()) {
      if (run(without_edge(g, u, v))) return true;
      if (g.order() > h_.order() && run(contract(g, u, v))) return true;
    }
    failed_.insert(std::move(key));
    return false;
  }

 private:
  // Vertex deletions and series contractions that cannot destroy an h-model
  // when every vertex of h has degree >= min_deg_.
  Graph reduce(Graph g) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        if ((d == 0 && min_deg_ >= 1) || (d == 1 && min_deg_ >= 2)) {
          g = drop_vertex(g, v);
          changed = true;
          break;
        }
        if (d == 2 && min_deg_ >= 3) {
          g = contract(g, g.neighbors(v).front(), v);
          changed = true;
          break;
        }
      }
    }
    return g;
  }

  const Graph& h_;
  int limit_;
  std::string hkey_;
  int min_deg_ = 0;
  std::set<std::string> failed_;
};

}  // namespace

bool has_minor(const Graph& g, const Graph& h, int limit) {
  if (g.order() > limit)
    throw TooLarge("minor search limited to " + std::to_string(limit) + " vertices, got " +
                   std::to_string(g.order()));
  return MinorSearch(h, limit).run(g);
}

bool is_outerplanar_by_minors(const Graph& g, int limit) {
  return !has_minor(g, complete_graph(4), limit) && !has_minor(g, complete_bipartite(2, 3), limit);
}

}  // namespace starchrome
