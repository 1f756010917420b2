#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace starchrome {

using Edge = std::pair<int, int>;

// Immutable simple undirected graph on vertices 0..n-1. Edges are stored with
// u < v and sorted, so structurally equal graphs compare equal.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(int n, const std::vector<Edge>& pairs);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const noexcept;
  bool adjacent(int u, int v) const;
  // Index into edges(), or -1.
  int edge_index(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

struct DegreeProfile {
  std::vector<int> degrees;
  int max_degree = 0;
};

DegreeProfile degree_profile(const Graph& g);

// nullopt stands for an infinite diameter (disconnected graph).
std::optional<int> diameter(const Graph& g);
std::vector<int> bfs_distances(const Graph& g, int source);
bool is_connected(const Graph& g);
bool is_two_connected(const Graph& g);
// Edge sets of the biconnected blocks (a bridge is a block of one edge).
std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g);

// perm[v] is the new id of v.
Graph relabel(const Graph& g, const std::vector<int>& perm);
Graph with_edge(const Graph& g, int u, int v);
Graph without_edge(const Graph& g, int u, int v);

inline constexpr int kDefaultCanonicalLimit = 16;

// Representative of the isomorphism class: equal for isomorphic inputs.
Graph canonical_form(const Graph& g, int limit = kDefaultCanonicalLimit);
// Byte string identifying the isomorphism class.
std::string canonical_key(const Graph& g, int limit = kDefaultCanonicalLimit);
// Labeling behind canonical_form: perm[v] is v's canonical position.
std::vector<int> canonical_labeling(const Graph& g, int limit = kDefaultCanonicalLimit);

}  // namespace starchrome
