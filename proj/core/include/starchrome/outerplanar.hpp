#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starchrome/graph.hpp"

namespace starchrome {

inline constexpr int kDefaultRecognitionLimit = 16;
inline constexpr int kDefaultEnumerationLimit = 12;

// Reduces each biconnected block by contracting degree-2 vertices while
// tracking which edges must lie on the outer cycle.
bool is_outerplanar(const Graph& g, int limit = kDefaultRecognitionLimit);

// Outerplanar and no non-edge can be added without losing outerplanarity.
bool is_maximal_outerplanar(const Graph& g, int limit = kDefaultRecognitionLimit);

// Minor containment by exhaustive delete/contract search, memoized on
// canonical keys. Exponential; meant for small graphs.
bool has_minor(const Graph& g, const Graph& h, int limit = kDefaultRecognitionLimit);

// K4- and K2,3-minor freeness, decided with has_minor.
bool is_outerplanar_by_minors(const Graph& g, int limit = kDefaultRecognitionLimit);

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);

struct MopMember {
  std::string key;
  Graph graph;  // canonical form
};

struct MopCatalog {
  int n = 0;
  std::vector<MopMember> members;  // sorted by key
  long long rooted_count = 0;
};

// Grows polygon triangulations from K3 by stacking a vertex on an outer edge.
// Vertices of each labeled triangulation are polygon positions, so the outer
// cycle is 0,1,...,k-1 throughout.
MopCatalog enumerate_mops(int n, int limit = kDefaultEnumerationLimit);

// Labeled triangulations of the n-gon with outer cycle 0..n-1.
std::vector<Graph> polygon_triangulations(int n, int limit = kDefaultEnumerationLimit);

// Edges of a maximal outerplanar graph lying on two triangles.
std::vector<Edge> mop_chords(const Graph& h);

std::vector<Graph> two_connected_spanning_subgraphs(const Graph& h, bool dedupe = false,
                                                    int limit = kDefaultRecognitionLimit);

struct Classification {
  std::optional<int> diameter;
  bool two_connected = false;
  bool outerplanar = false;
  bool maximal = false;
  bool subcubic = false;

  // zeta_n^d: 2-connected outerplanar with diameter d.
  bool in_zeta(int d) const { return two_connected && outerplanar && diameter == d; }
  // xi_n^d: maximal outerplanar with diameter d.
  bool in_xi(int d) const { return maximal && diameter == d; }
};

Classification classify(const Graph& g, int limit = kDefaultRecognitionLimit);

}  // namespace starchrome
