#include "starchrome/graph.hpp"

#include <algorithm>
#include <queue>

#include "starchrome/errors.hpp"

namespace starchrome {

Graph Graph::from_edges(int n, const std::vector<Edge>& pairs) {
  if (n < 0) throw OutOfRange("negative vertex count");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw OutOfRange("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside 0.." + std::to_string(n - 1));
    if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end())
    throw DuplicateEdge("duplicate edge (" + std::to_string(dup->first) + "," +
                        std::to_string(dup->second) + ")");
  g.adj_.assign(n, {});
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());
  return g;
}

int Graph::max_degree() const noexcept {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

bool Graph::adjacent(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
  Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.resize(g.order());
  for (int v = 0; v < g.order(); ++v) p.degrees[v] = g.degree(v);
  p.max_degree = g.max_degree();
  return p;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.order(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

std::optional<int> diameter(const Graph& g) {
  int best = 0;
  for (int s = 0; s < g.order(); ++s) {
    for (int d : bfs_distances(g, s)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

namespace {

// Iterative Hopcroft-Tarjan; calls on_block with each block's edges.
template <class F>
void tarjan_blocks(const Graph& g, F&& on_block) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> stack;
  int timer = 0;
  struct Frame {
    int v, parent;
    std::size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> frames{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        int w = nb[f.next++];
        if (disc[w] < 0) {
          stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          frames.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      int v = f.v, p = f.parent;
      frames.pop_back();
      if (p < 0) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        std::vector<Edge> block;
        while (true) {
          Edge e = stack.back();
          stack.pop_back();
          block.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
          if (e == Edge{p, v}) break;
        }
        on_block(std::move(block));
      }
    }
  }
}

}  // namespace

std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g) {
  std::vector<std::vector<Edge>> out;
  tarjan_blocks(g, [&](std::vector<Edge> b) {
    std::sort(b.begin(), b.end());
    out.push_back(std::move(b));
  });
  return out;
}

bool is_two_connected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  auto blocks = biconnected_blocks(g);
  return blocks.size() == 1;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw OutOfRange("permutation size does not match vertex count");
  std::vector<Edge> es;
  es.reserve(g.size());
  for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.order(), es);
}

Graph with_edge(const Graph& g, int u, int v) {
  auto es = g.edges();
  es.emplace_back(u, v);
  return Graph::from_edges(g.order(), es);
}

Graph without_edge(const Graph& g, int u, int v) {
  int idx = g.edge_index(u, v);
  if (idx < 0) return g;
  auto es = g.edges();
  es.erase(es.begin() + idx);
  return Graph::from_edges(g.order(), es);
}

}  // namespace starchrome
