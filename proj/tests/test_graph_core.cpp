#include <doctest.h>

#include <random>
#include <set>

#include "starchrome/errors.hpp"
#include "starchrome/graph.hpp"
#include "support.hpp"

using namespace starchrome;

namespace {

Graph path(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::from_edges(n, es);
}

Graph cycle(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, es);
}

Graph fan(int n) {  // hub 0, path 1..n-1
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) es.emplace_back(0, i);
  for (int i = 1; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::from_edges(n, es);
}

}  // namespace

TEST_CASE("from_edges builds a normalized simple graph") {
  Graph k3 = Graph::from_edges(3, {{1, 0}, {2, 1}, {0, 2}});
  CHECK(k3.order() == 3);
  CHECK(k3.size() == 3);
  CHECK(k3.max_degree() == 2);
  CHECK(k3.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(k3.adjacent(2, 0));
  CHECK(k3.edge_index(2, 1) == 2);
  CHECK(k3 == Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}));

  Graph empty = Graph::from_edges(4, {});
  CHECK(empty.size() == 0);
  CHECK(empty.max_degree() == 0);
  CHECK(empty.edge_index(0, 1) == -1);
}

TEST_CASE("from_edges rejects bad input") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), SelfLoop);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), OutOfRange);
  CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 2}}), OutOfRange);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), DuplicateEdge);
}

TEST_CASE("degree profile") {
  auto p = degree_profile(fan(6));
  CHECK(p.degrees == std::vector<int>{5, 2, 3, 3, 3, 2});
  CHECK(p.max_degree == 5);
}

TEST_CASE("diameter examples") {
  CHECK(diameter(cycle(5)) == 2);
  CHECK(diameter(path(4)) == 3);
  CHECK(diameter(fan(6)) == 2);
  CHECK(diameter(Graph::from_edges(1, {})) == 0);
  CHECK_FALSE(diameter(Graph::from_edges(2, {})).has_value());
  CHECK(bfs_distances(path(4), 0) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("diameter agrees with Floyd-Warshall") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 400; ++t) {
    int n = 1 + t % 9;
    Graph g = oracle::random_graph(n, 0.35, rng);
    int want = oracle::fw_diameter(g);
    auto got = diameter(g);
    if (want < 0) CHECK_FALSE(got.has_value());
    else CHECK(got == want);
    CHECK(is_connected(g) == (want >= 0));
  }
}

TEST_CASE("two-connectivity examples") {
  CHECK(is_two_connected(cycle(3)));
  CHECK(is_two_connected(cycle(6)));
  CHECK(is_two_connected(fan(5)));
  CHECK_FALSE(is_two_connected(path(2)));
  CHECK_FALSE(is_two_connected(path(3)));
  Graph bowtie = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  CHECK_FALSE(is_two_connected(bowtie));
  auto blocks = biconnected_blocks(bowtie);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].size() == 3);
  CHECK(blocks[1].size() == 3);
}

TEST_CASE("two-connectivity agrees with vertex deletion; blocks partition the edges") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 500; ++t) {
    int n = 2 + t % 8;
    Graph g = oracle::random_graph(n, 0.45, rng);
    CHECK(is_two_connected(g) == oracle::naive_two_connected(g));

    std::multiset<Edge> seen;
    for (const auto& b : biconnected_blocks(g)) {
      seen.insert(b.begin(), b.end());
      // a block of 2+ edges is itself 2-connected
      if (b.size() >= 2) {
        std::vector<int> ids;
        for (auto [u, v] : b) ids.push_back(u), ids.push_back(v);
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        std::vector<Edge> local;
        auto at = [&](int x) { return int(std::lower_bound(ids.begin(), ids.end(), x) - ids.begin()); };
        for (auto [u, v] : b) local.emplace_back(at(u), at(v));
        CHECK(oracle::naive_two_connected(Graph::from_edges(int(ids.size()), local)));
      }
    }
    CHECK(std::vector<Edge>(seen.begin(), seen.end()) == g.edges());
  }
}

TEST_CASE("relabel and edge edits") {
  Graph p = path(3);
  Graph r = relabel(p, {2, 0, 1});  // 0->2, 1->0, 2->1
  CHECK(r.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
  CHECK(with_edge(p, 0, 2) == cycle(3));
  CHECK(without_edge(cycle(3), 2, 0) == p);
  CHECK_THROWS_AS(with_edge(p, 0, 1), DuplicateEdge);
}

TEST_CASE("canonical form small examples") {
  Graph c4 = cycle(4);
  Graph c4b = Graph::from_edges(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
  CHECK(canonical_form(c4) == canonical_form(c4b));
  CHECK(canonical_key(c4) == canonical_key(c4b));
  CHECK(canonical_key(cycle(3)) != canonical_key(path(3)));
  CHECK(canonical_key(Graph::from_edges(3, {{0, 1}})) != canonical_key(path(3)));
  CHECK(canonical_key(Graph::from_edges(3, {})) != canonical_key(Graph::from_edges(4, {})));
  CHECK_THROWS_AS(canonical_key(Graph::from_edges(17, {})), TooLarge);
  CHECK_NOTHROW(canonical_key(Graph::from_edges(20, {}), 20));
}

TEST_CASE("hexagon triangulations fall into three classes") {
  auto tris = oracle::polygon_triangulations(6);
  REQUIRE(tris.size() == 14);
  std::set<std::string> keys, oracle_keys;
  for (const auto& t : tris) keys.insert(canonical_key(t)), oracle_keys.insert(oracle::perm_key(t));
  CHECK(keys.size() == 3);
  CHECK(oracle_keys.size() == 3);
}

TEST_CASE("canonical labeling is invariant and complete") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    int n = 1 + t % 8;
    Graph g = oracle::random_graph(n, 0.4, rng);
    Graph h = oracle::random_relabel(g, rng);
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(canonical_key(g) == canonical_key(h));
    CHECK(relabel(g, canonical_labeling(g)) == canonical_form(g));
    CHECK(oracle::perm_key(canonical_form(g)) == oracle::perm_key(g));
  }
}

TEST_CASE("canonical key equality matches the permutation oracle") {
  // regular-ish graphs are where refinement alone is weakest
  std::mt19937_64 rng(14);
  std::vector<Graph> pool;
  for (int t = 0; t < 250; ++t) pool.push_back(oracle::random_graph(6, 0.5, rng));
  for (int k = 3; k <= 7; ++k) pool.push_back(cycle(k));
  pool.push_back(Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}));
  pool.push_back(Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}));
  pool.push_back(Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}));
  pool.push_back(Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}));
  std::vector<std::string> mine, theirs;
  for (const auto& g : pool) mine.push_back(canonical_key(g)), theirs.push_back(oracle::perm_key(g));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      if (pool[i].order() == pool[j].order()) CHECK((mine[i] == mine[j]) == (theirs[i] == theirs[j]));
}
