#include <algorithm>
#include <map>
#include <set>

#include "starchrome/errors.hpp"
#include "starchrome/outerplanar.hpp"

namespace starchrome {
namespace {

using EdgeSet = std::vector<Edge>;

// Stack a new vertex on outer edge (i, i+1 mod k) of a triangulated k-gon.
// The new vertex takes position i+1 and later positions shift by one.
EdgeSet stack_on(const EdgeSet& es, int k, int i) {
  auto shift = [i](int x) { return x > i ? x + 1 : x; };
  EdgeSet out;
  out.reserve(es.size() + 2);
  for (auto [a, b] : es) out.emplace_back(shift(a), shift(b));
  int a = i, b = (i + 1) % k;
  int nb = shift(b);
  out.emplace_back(std::min(a, i + 1), std::max(a, i + 1));
  out.emplace_back(std::min(nb, i + 1), std::max(nb, i + 1));
  std::sort(out.begin(), out.end());
  return out;
}

std::set<EdgeSet> triangulation_level(int n) {
  std::set<EdgeSet> level{{{0, 1}, {0, 2}, {1, 2}}};
  for (int k = 3; k < n; ++k) {
    std::set<EdgeSet> next;
    for (const auto& es : level)
      for (int i = 0; i < k; ++i) next.insert(stack_on(es, k, i));
    level = std::move(next);
  }
  return level;
}

void check_range(int n, int limit) {
  if (n < 3) throw OutOfRange("maximal outerplanar enumeration needs n >= 3");
  if (n > limit)
    throw TooLarge("enumeration limited to n <= " + std::to_string(limit) + ", got " +
                   std::to_string(n));
}

}  // namespace

std::vector<Graph> polygon_triangulations(int n, int limit) {
  check_range(n, limit);
  std::vector<Graph> out;
  for (const auto& es : triangulation_level(n)) out.push_back(Graph::from_edges(n, es));
  return out;
}

MopCatalog enumerate_mops(int n, int limit) {
  check_range(n, limit);
  MopCatalog cat;
  cat.n = n;
  std::map<std::string, Graph> members;
  const auto level = triangulation_level(n);
  cat.rooted_count = static_cast<long long>(level.size());
  for (const auto& es : level) {
    Graph g = Graph::from_edges(n, es);
    std::string key = canonical_key(g, std::max(limit, n));
    if (!members.count(key)) members.emplace(std::move(key), canonical_form(g, std::max(limit, n)));
  }
  for (auto& [k, g] : members) cat.members.push_back({k, std::move(g)});
  return cat;
}

}  // namespace starchrome
