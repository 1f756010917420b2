// Small independent oracles shared by the test binaries. Nothing here calls
// into the library's canonical labeling, recognizers or solvers.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "starchrome/graph.hpp"

namespace oracle {

using starchrome::Edge;
using starchrome::Graph;

// Minimum upper-triangle bit string over all n! labelings.
inline std::string perm_key(const Graph& g) {
  const int n = g.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  bool first = true;
  do {
    std::string s(1, static_cast<char>(n));
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) s.push_back(g.adjacent(p[i], p[j]) ? '1' : '0');
    if (first || s < best) best = s, first = false;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

inline Graph random_relabel(const Graph& g, std::mt19937_64& rng, std::vector<int>* out = nullptr) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  if (out) *out = p;
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) es.emplace_back(p[u], p[v]);
  return Graph::from_edges(g.order(), es);
}

// Floyd-Warshall; -1 for disconnected.
inline int fw_diameter(const Graph& g) {
  const int n = g.order(), inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  int best = 0;
  for (auto& row : d)
    for (int x : row) best = std::max(best, x);
  return best >= inf ? -1 : best;
}

inline bool connected_without(const Graph& g, int removed) {
  const int n = g.order();
  int start = removed == 0 ? 1 : 0;
  if (n - (removed >= 0) <= 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u))
      if (w != removed && !seen[w]) seen[w] = 1, ++count, stack.push_back(w);
  }
  return count == n - (removed >= 0);
}

// n >= 3, connected, and no vertex whose removal disconnects the rest.
inline bool naive_two_connected(const Graph& g) {
  if (g.order() < 3 || !connected_without(g, -1)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (!connected_without(g, v)) return false;
  return true;
}

// Triangulations of the polygon 0..n-1 by splitting on the triangle that
// holds side (lo, hi).
inline void triangulate(int lo, int hi, std::vector<Edge>& cur, const std::function<void()>& done) {
  if (hi - lo < 2) {
    done();
    return;
  }
  for (int k = lo + 1; k < hi; ++k) {
    std::size_t mark = cur.size();
    if (k - lo >= 2) cur.emplace_back(lo, k);
    if (hi - k >= 2) cur.emplace_back(k, hi);
    triangulate(lo, k, cur, [&] { triangulate(k, hi, cur, done); });
    cur.resize(mark);
  }
}

inline std::vector<Graph> polygon_triangulations(int n) {
  std::vector<Edge> cur;
  std::vector<Graph> graphs;
  triangulate(0, n - 1, cur, [&] {
    std::vector<Edge> es = cur;
    for (int i = 0; i < n; ++i) es.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    graphs.push_back(Graph::from_edges(n, es));
  });
  return graphs;
}

// Unlabeled connected graphs with 1..max_edges edges, by adding one edge
// (inside, or to a fresh vertex) and deduping with `key`.
inline std::vector<Graph> connected_graphs_upto(int max_edges,
                                                const std::function<std::string(const Graph&)>& key = perm_key) {
  std::vector<Graph> all;
  std::vector<Graph> level{Graph::from_edges(2, {{0, 1}})};
  std::set<std::string> seen{key(level[0])};
  all = level;
  for (int m = 2; m <= max_edges; ++m) {
    std::vector<Graph> next;
    for (const Graph& g : level) {
      const int n = g.order();
      auto consider = [&](Graph h) {
        if (seen.insert(key(h)).second) next.push_back(std::move(h));
      };
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v)
          if (!g.adjacent(u, v)) {
            auto es = g.edges();
            es.emplace_back(u, v);
            consider(Graph::from_edges(n, es));
          }
        auto es = g.edges();
        es.emplace_back(u, n);
        consider(Graph::from_edges(n + 1, es));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return all;
}

inline Graph random_connected(int n, int m, std::mt19937_64& rng) {
  // random spanning tree, then extra edges
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) es.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  std::vector<Edge> rest;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (std::find(es.begin(), es.end(), Edge{u, v}) == es.end()) rest.emplace_back(u, v);
  std::shuffle(rest.begin(), rest.end(), rng);
  for (int i = 0; i < m - (n - 1) && i < static_cast<int>(rest.size()); ++i) es.push_back(rest[i]);
  return Graph::from_edges(n, es);
}

}  // namespace oracle
