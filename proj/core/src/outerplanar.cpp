#include "starchrome/outerplanar.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "starchrome/errors.hpp"

namespace starchrome {
namespace {

void check_limit(const Graph& g, int limit) {
  if (g.order() > limit)
    throw TooLarge("outerplanarity test limited to " + std::to_string(limit) +
                   " vertices, got " + std::to_string(g.order()));
}

// A 2-connected block is outerplanar iff repeatedly removing a degree-2
// vertex v (neighbors a,b) and replacing the path a-v-b by an outer edge ab
// ends in a triangle. The path a-v-b lies on the outer cycle; if ab already
// carries an outer path, the outer cycle closes early.
bool block_outerplanar(const std::vector<Edge>& block) {
  if (block.size() <= 1) return true;
  std::map<int, std::set<int>> adj;
  std::set<Edge> outer;
  for (auto [u, v] : block) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  auto key = [](int a, int b) { return Edge{std::min(a, b), std::max(a, b)}; };
  const std::size_t n0 = adj.size();
  if (block.size() > 2 * n0 - 3) return false;

  std::vector<int> work;
  for (auto& [v, nb] : adj)
    if (nb.size() == 2) work.push_back(v);

  while (adj.size() > 3) {
    int v = -1;
    while (!work.empty()) {
      int c = work.back();
      work.pop_back();
      auto it = adj.find(c);
      if (it != adj.end() && it->second.size() == 2) {
        v = c;
        break;
      }
    }
    if (v < 0) return false;
    int a = *adj[v].begin(), b = *adj[v].rbegin();
    if (outer.count(key(a, b))) return false;
    adj[a].erase(v);
    adj[b].erase(v);
    adj.erase(v);
    outer.erase(key(a, v));
    outer.erase(key(b, v));
    adj[a].insert(b);
    adj[b].insert(a);
    outer.insert(key(a, b));
    for (int w : {a, b})
      if (adj[w].size() == 2) work.push_back(w);
  }
  return true;
}

}  // namespace

bool is_outerplanar(const Graph& g, int limit) {
  check_limit(g, limit);
  if (g.order() >= 2 && g.size() > 2 * g.order() - 3) return false;
  for (const auto& b : biconnected_blocks(g))
    if (!block_outerplanar(b)) return false;
  return true;
}

bool is_maximal_outerplanar(const Graph& g, int limit) {
  check_limit(g, limit);
  if (g.order() < 3 || !is_outerplanar(g, limit)) return false;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v) && is_outerplanar(with_edge(g, u, v), limit)) return false;
  return true;
}

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> es;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) es.emplace_back(u, a + v);
  return Graph::from_edges(a + b, es);
}

std::vector<Edge> mop_chords(const Graph& h) {
  std::vector<Edge> chords;
  for (auto [u, v] : h.edges()) {
    int tri = 0;
    for (int w : h.neighbors(u))
      if (w != v && h.adjacent(w, v)) ++tri;
    if (tri == 2) chords.emplace_back(u, v);
  }
  return chords;
}

std::vector<Graph> two_connected_spanning_subgraphs(const Graph& h, bool dedupe, int limit) {
  if (!is_maximal_outerplanar(h, limit)) throw NotMop("input is not maximal outerplanar");
  const auto chords = mop_chords(h);
  const int c = static_cast<int>(chords.size());
  std::vector<Graph> out;
  std::set<std::string> seen;
  for (long long mask = 0; mask < (1LL << c); ++mask) {
    std::vector<Edge> es;
    for (auto e : h.edges()) {
      auto it = std::find(chords.begin(), chords.end(), e);
      if (it != chords.end() && (mask >> (it - chords.begin())) & 1) continue;
      es.push_back(e);
    }
    Graph s = Graph::from_edges(h.order(), es);
    if (!is_two_connected(s)) continue;
    if (dedupe && !seen.insert(canonical_key(s, limit)).second) continue;
    out.push_back(std::move(s));
  }
  return out;
}

Classification classify(const Graph& g, int limit) {
  Classification c;
  c.diameter = diameter(g);
  c.two_connected = is_two_connected(g);
  c.outerplanar = is_outerplanar(g, limit);
  c.maximal = c.outerplanar && is_maximal_outerplanar(g, limit);
  c.subcubic = g.max_degree() <= 3;
  return c;
}

}  // namespace starchrome
