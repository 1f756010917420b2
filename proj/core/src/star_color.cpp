#include "starchrome/star_color.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "starchrome/errors.hpp"

namespace starchrome {

EdgeColoring::EdgeColoring(Graph g, std::vector<int> colors_by_edge_index)
    : graph_(std::move(g)), colors_(std::move(colors_by_edge_index)) {
  if (static_cast<int>(colors_.size()) != graph_.size())
    throw OutOfRange("color vector size does not match edge count");
  for (int c : colors_)
    if (c < 0) throw OutOfRange("negative color id");
}

int EdgeColoring::color(int u, int v) const {
  int idx = graph_.edge_index(u, v);
  if (idx < 0)
    throw OutOfRange("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  return colors_[idx];
}

void EdgeColoring::set(int u, int v, int c) {
  int idx = graph_.edge_index(u, v);
  if (idx < 0)
    throw OutOfRange("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  set_at(idx, c);
}

void EdgeColoring::set_at(int edge_index, int c) {
  if (c < 0) throw OutOfRange("negative color id");
  colors_.at(edge_index) = c;
}

bool EdgeColoring::is_total() const {
  return std::none_of(colors_.begin(), colors_.end(), [](int c) { return c == 0; });
}

int EdgeColoring::palette_size() const {
  return colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
}

int EdgeColoring::distinct_colors() const {
  std::set<int> s(colors_.begin(), colors_.end());
  s.erase(0);
  return static_cast<int>(s.size());
}

const char* kind_name(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::Proper: return "proper";
    case Violation::Kind::StarPath: return "star-path";
    case Violation::Kind::StarCycle: return "star-cycle";
  }
  return "?";
}

std::vector<Edge> Violation::edges() const {
  std::vector<Edge> es;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) es.emplace_back(vertices[i], vertices[i + 1]);
  if (kind == Kind::StarCycle) es.emplace_back(vertices.back(), vertices.front());
  return es;
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << kind_name(kind) << ' ';
  for (std::size_t i = 0; i < vertices.size(); ++i) os << (i ? "-" : "") << vertices[i];
  if (kind == Kind::StarCycle) os << '-' << vertices.front();
  os << " colors " << color_a;
  if (kind != Kind::Proper) os << ',' << color_b;
  return os.str();
}

namespace {

void require_total(const EdgeColoring& c) {
  if (!c.is_total()) throw PartialColoring("coloring leaves an edge uncolored");
}

}  // namespace

bool is_proper(const EdgeColoring& c) {
  require_total(c);
  const Graph& g = c.graph();
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> seen;
    for (int w : g.neighbors(v)) seen.push_back(c.color(v, w));
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

std::vector<Violation> star_violations(const EdgeColoring& c) {
  require_total(c);
  const Graph& g = c.graph();
  using Key = std::pair<int, std::vector<int>>;
  std::set<Key> seen;
  std::vector<Violation> out;
  auto emit = [&](Violation::Kind kind, std::vector<int> vs, int a, int b) {
    if (seen.insert({static_cast<int>(kind), vs}).second)
      out.push_back({kind, std::move(vs), a, b});
  };

  for (int y = 0; y < g.order(); ++y) {
    const auto& nb = g.neighbors(y);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (c.color(y, nb[i]) == c.color(y, nb[j]))
          emit(Violation::Kind::Proper, {nb[i], y, nb[j]}, c.color(y, nb[i]), 0);
  }

  // p0 -a- p1 -b- p2 -a- p3 -b- p4, enumerated from the middle vertex.
  for (int p2 = 0; p2 < g.order(); ++p2) {
    for (int p1 : g.neighbors(p2)) {
      const int b = c.color(p1, p2);
      for (int p3 : g.neighbors(p2)) {
        if (p3 == p1) continue;
        const int a = c.color(p2, p3);
        if (a == b) continue;
        for (int p0 : g.neighbors(p1)) {
          if (p0 == p2 || c.color(p0, p1) != a) continue;
          for (int p4 : g.neighbors(p3)) {
            if (p4 == p2 || c.color(p3, p4) != b) continue;
            if (p0 == p4) {
              if (p0 == p3 || p4 == p1) continue;
              // rotate to the smallest vertex, then pick the direction
              std::vector<int> cyc{p0, p1, p2, p3};
              auto m = std::min_element(cyc.begin(), cyc.end()) - cyc.begin();
              std::rotate(cyc.begin(), cyc.begin() + m, cyc.end());
              if (cyc[3] < cyc[1]) std::reverse(cyc.begin() + 1, cyc.end());
              int ca = c.color(cyc[0], cyc[1]), cb = c.color(cyc[1], cyc[2]);
              emit(Violation::Kind::StarCycle, std::move(cyc), ca, cb);
              continue;
            }
            std::vector<int> path{p0, p1, p2, p3, p4};
            std::set<int> distinct(path.begin(), path.end());
            if (distinct.size() != 5) continue;
            std::vector<int> rev(path.rbegin(), path.rend());
            if (rev < path) emit(Violation::Kind::StarPath, rev, b, a);
            else emit(Violation::Kind::StarPath, path, a, b);
          }
        }
      }
    }
  }
  return out;
}

// Oracle: restricted-growth strings over edges in index order, proper
// prefixes only, each complete assignment checked by walking every 4-edge
// walk of the graph.
namespace {

struct BruteForce {
  const Graph& g;
  int k = 0;
  std::vector<std::vector<int>> col;  // col[u][v], 0 = no edge
  std::vector<int> assign;

  explicit BruteForce(const Graph& graph)
      : g(graph), col(graph.order(), std::vector<int>(graph.order(), 0)), assign(graph.size(), 0) {}

  bool clean() const {
    const int n = g.order();
    for (int w0 = 0; w0 < n; ++w0)
      for (int w1 = 0; w1 < n; ++w1) {
        if (!col[w0][w1]) continue;
        for (int w2 = 0; w2 < n; ++w2) {
          if (!col[w1][w2] || w2 == w0) continue;
          if (col[w1][w2] == col[w0][w1]) return false;
          for (int w3 = 0; w3 < n; ++w3) {
            if (!col[w2][w3] || w3 == w1 || col[w2][w3] != col[w0][w1]) continue;
            for (int w4 = 0; w4 < n; ++w4) {
              if (!col[w3][w4] || w4 == w2 || col[w3][w4] != col[w1][w2]) continue;
              std::set<int> five{w0, w1, w2, w3, w4};
              std::set<int> four{w0, w1, w2, w3};
              if (five.size() == 5 || (w4 == w0 && four.size() == 4)) return false;
            }
          }
        }
      }
    return true;
  }

  bool proper_at(int u, int v, int c) const {
    for (int w = 0; w < g.order(); ++w)
      if ((w != v && col[u][w] == c) || (w != u && col[v][w] == c)) return false;
    return true;
  }

  bool rec(int i, int used) {
    if (i == g.size()) return clean();
    auto [u, v] = g.edges()[i];
    for (int c = 1; c <= std::min(k, used + 1); ++c) {
      if (!proper_at(u, v, c)) continue;
      col[u][v] = col[v][u] = c;
      assign[i] = c;
      if (rec(i + 1, std::max(used, c))) return true;
      col[u][v] = col[v][u] = 0;
    }
    return false;
  }
};

}  // namespace

int brute_force_chi_star(const Graph& g) {
  if (g.size() > 9) throw TooLarge("brute force limited to 9 edges");
  if (g.size() == 0) return 0;
  for (int k = 1;; ++k) {
    BruteForce bf(g);
    bf.k = k;
    if (bf.rec(0, 0)) return k;
  }
}

}  // namespace starchrome
