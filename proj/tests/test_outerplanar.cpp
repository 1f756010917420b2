#include <doctest.h>

#include <random>
#include <set>

#include "starchrome/errors.hpp"
#include "starchrome/families.hpp"
#include "starchrome/outerplanar.hpp"
#include "support.hpp"

using namespace starchrome;

namespace {

long long catalan(int k) {
  long long c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

Graph cycle(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, es);
}

// Every labeled graph on n vertices, one per isomorphism class.
std::vector<Graph> all_graphs(int n) {
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::set<std::string> seen;
  std::vector<Graph> out;
  for (long long mask = 0; mask < (1LL << slots.size()); ++mask) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1) es.push_back(slots[i]);
    Graph g = Graph::from_edges(n, es);
    if (seen.insert(canonical_key(g)).second) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("recognition examples") {
  CHECK_FALSE(is_outerplanar(complete_graph(4)));
  CHECK_FALSE(is_outerplanar(complete_bipartite(2, 3)));
  CHECK(is_outerplanar(complete_bipartite(2, 2)));
  CHECK(is_outerplanar(cycle(5)));
  CHECK(is_outerplanar(without_edge(complete_graph(4), 0, 1)));
  CHECK(is_outerplanar(Graph::from_edges(7, {})));
  // K4 subdivided stays non-outerplanar
  Graph sub = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 4}, {4, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK_FALSE(is_outerplanar(sub));

  CHECK(is_maximal_outerplanar(complete_graph(3)));
  CHECK(is_maximal_outerplanar(without_edge(complete_graph(4), 0, 1)));
  CHECK_FALSE(is_maximal_outerplanar(cycle(4)));
  CHECK_FALSE(is_maximal_outerplanar(complete_graph(4)));
  CHECK(is_maximal_outerplanar(build_family(FamilyId::G62, {}).graph));
  CHECK(is_maximal_outerplanar(build_family(FamilyId::G61, {}).graph));
  CHECK_THROWS_AS(is_outerplanar(Graph::from_edges(17, {})), TooLarge);
}

TEST_CASE("has_minor examples") {
  CHECK(has_minor(complete_graph(5), complete_graph(4)));
  CHECK(has_minor(complete_bipartite(3, 3), complete_bipartite(2, 3)));
  CHECK(has_minor(cycle(6), cycle(4)));
  CHECK_FALSE(has_minor(cycle(6), complete_graph(4)));
  CHECK_FALSE(has_minor(cycle(3), cycle(4)));
  CHECK(has_minor(complete_graph(4), complete_graph(4)));
}

TEST_CASE("degree-2 reduction agrees with the minor search on every graph up to 6 vertices") {
  int outer = 0, total = 0;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : all_graphs(n)) {
      ++total;
      bool a = is_outerplanar(g), b = is_outerplanar_by_minors(g);
      CHECK(a == b);
      outer += a;
    }
  CHECK(total == 1 + 2 + 4 + 11 + 34 + 156);
  CHECK(outer > 0);
}

TEST_CASE("degree-2 reduction agrees with the minor search on random graphs up to 8 vertices") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 250; ++t) {
    int n = 7 + t % 2;
    Graph g = oracle::random_graph(n, t % 3 == 0 ? 0.25 : 0.3, rng);
    CHECK(is_outerplanar(g) == is_outerplanar_by_minors(g));
  }
}

TEST_CASE("outerplanarity is hereditary and maximality is the edge count") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 300; ++t) {
    int n = 3 + t % 7;
    Graph g = oracle::random_graph(n, 0.4, rng);
    bool op = is_outerplanar(g);
    if (op) {
      for (auto [u, v] : g.edges()) CHECK(is_outerplanar(without_edge(g, u, v)));
      CHECK(g.size() <= 2 * n - 3);
    }
    CHECK(is_maximal_outerplanar(g) == (op && g.size() == 2 * n - 3));
  }
}

TEST_CASE("rooted MOP counts are Catalan numbers") {
  for (int n = 3; n <= 12; ++n) {
    CHECK(enumerate_mops(n).rooted_count == catalan(n - 2));
    if (n <= 10) CHECK(static_cast<long long>(polygon_triangulations(n).size()) == catalan(n - 2));
  }
  CHECK_THROWS_AS(enumerate_mops(13), TooLarge);
  CHECK_THROWS_AS(enumerate_mops(2), OutOfRange);
}

TEST_CASE("labeled triangulations match the recursive oracle") {
  for (int n = 3; n <= 9; ++n) {
    auto mine = polygon_triangulations(n);
    auto theirs = oracle::polygon_triangulations(n);
    std::set<std::vector<Edge>> a, b;
    for (const auto& g : mine) a.insert(g.edges());
    for (const auto& g : theirs) b.insert(g.edges());
    CHECK(a.size() == mine.size());
    CHECK(a == b);
  }
}

TEST_CASE("non-isomorphic MOP counts") {
  const std::vector<int> expect{1, 1, 1, 3, 4, 12, 27, 82, 228, 733};
  for (int n = 3; n <= 12; ++n) {
    auto cat = enumerate_mops(n);
    CHECK(cat.members.size() == static_cast<std::size_t>(expect[n - 3]));
    for (std::size_t i = 1; i < cat.members.size(); ++i) CHECK(cat.members[i - 1].key < cat.members[i].key);
    if (n <= 9)
      for (const auto& m : cat.members) {
        CHECK(m.graph.size() == 2 * n - 3);
        CHECK(is_maximal_outerplanar(m.graph));
        CHECK(m.key == canonical_key(m.graph));
        CHECK(m.graph == canonical_form(m.graph));
      }
  }
  // independent count: recursive triangulations, deduped by permutation search
  for (int n = 3; n <= 8; ++n) {
    std::set<std::string> keys;
    for (const auto& t : oracle::polygon_triangulations(n)) keys.insert(oracle::perm_key(t));
    CHECK(keys.size() == enumerate_mops(n).members.size());
  }
}

TEST_CASE("diameter-2 MOPs are the fans, plus G61 at n = 6") {
  const std::string g61 = canonical_key(build_family(FamilyId::G61, {}).graph);
  for (int n = 4; n <= 10; ++n) {
    std::set<std::string> d2;
    for (const auto& m : enumerate_mops(n).members)
      if (classify(m.graph).in_xi(2)) d2.insert(m.key);
    std::set<std::string> want{canonical_key(build_family(FamilyId::Fan, {n, 0, 0}).graph)};
    if (n == 6) want.insert(g61);
    CHECK(d2 == want);
  }
}

TEST_CASE("chords and 2-connected spanning subgraphs") {
  Graph k3 = complete_graph(3);
  CHECK(mop_chords(k3).empty());
  auto only = two_connected_spanning_subgraphs(k3);
  REQUIRE(only.size() == 1);
  CHECK(only[0] == k3);

  Graph f5 = build_family(FamilyId::Fan, {5, 0, 0}).graph;
  CHECK(mop_chords(f5).size() == 2);
  CHECK(two_connected_spanning_subgraphs(f5).size() == 4);
  CHECK(two_connected_spanning_subgraphs(f5, true).size() == 3);

  Graph g61 = build_family(FamilyId::G61, {}).graph;
  CHECK(mop_chords(g61).size() == 3);
  const std::string prime = canonical_key(build_family(FamilyId::G61Prime, {}).graph);
  bool found = false;
  for (const auto& s : two_connected_spanning_subgraphs(g61)) {
    CHECK(is_two_connected(s));
    CHECK(is_outerplanar(s));
    found |= canonical_key(s) == prime;
  }
  CHECK(found);
  CHECK_THROWS_AS(two_connected_spanning_subgraphs(cycle(5)), NotMop);
}

TEST_CASE("classify") {
  auto c = classify(build_family(FamilyId::G61, {}).graph);
  CHECK(c.in_xi(2));
  CHECK(c.in_zeta(2));
  CHECK_FALSE(c.subcubic);
  auto c5 = classify(cycle(5));
  CHECK(c5.in_zeta(2));
  CHECK_FALSE(c5.in_xi(2));
  CHECK(c5.subcubic);
  auto k4 = classify(complete_graph(4));
  CHECK_FALSE(k4.outerplanar);
  CHECK_FALSE(k4.in_zeta(1));
}
