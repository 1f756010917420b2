// Canonical labeling by individualization/refinement. Every leaf of the
// search tree is a discrete ordered partition; the canonical labeling is the
// leaf whose relabeled upper triangle (graph6 column order) is smallest.
// Pruning is limited to interchangeable twin vertices, which is enough for
// the stars, fans and triangulations this library deals with.
#include <algorithm>
#include <bit>
#include <cstdint>

#include "starchrome/errors.hpp"
#include "starchrome/graph.hpp"

namespace starchrome {
namespace {

using Mask = std::uint64_t;
using Cells = std::vector<std::vector<int>>;

struct Labeler {
  int n;
  std::vector<Mask> adj;
  std::string best_bits;
  std::vector<int> best_order;

  explicit Labeler(const Graph& g) : n(g.order()), adj(n, 0) {
    for (auto [u, v] : g.edges()) {
      adj[u] |= Mask{1} << v;
      adj[v] |= Mask{1} << u;
    }
  }

  void refine(Cells& cells) const {
    std::vector<int> cell_of(n);
    for (bool split = true; split;) {
      split = false;
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
      for (std::size_t c = 0; c < cells.size() && !split; ++c) {
        if (cells[c].size() < 2) continue;
        std::vector<std::pair<std::vector<int>, int>> sig;
        for (int v : cells[c]) {
          std::vector<int> counts(cells.size(), 0);
          for (Mask m = adj[v]; m; m &= m - 1) ++counts[cell_of[std::countr_zero(m)]];
          sig.emplace_back(std::move(counts), v);
        }
        std::sort(sig.begin(), sig.end());
        if (sig.front().first == sig.back().first) continue;
        Cells parts;
        for (std::size_t i = 0; i < sig.size(); ++i) {
          if (i == 0 || sig[i].first != sig[i - 1].first) parts.emplace_back();
          parts.back().push_back(sig[i].second);
        }
        cells.erase(cells.begin() + static_cast<long>(c));
        cells.insert(cells.begin() + static_cast<long>(c), parts.begin(), parts.end());
        split = true;
      }
    }
  }

  std::string bits_for(const std::vector<int>& order) const {
    std::string s;
    s.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) s.push_back((adj[order[i]] >> order[j]) & 1 ? '1' : '0');
    return s;
  }

  bool twins(int u, int w) const {
    Mask bu = Mask{1} << u, bw = Mask{1} << w;
    return (adj[u] & ~bw) == (adj[w] & ~bu);
  }

  void search(Cells cells) {
    refine(cells);
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      std::vector<int> order;
      order.reserve(n);
      for (const auto& c : cells) order.push_back(c.front());
      std::string bits = bits_for(order);
      if (best_order.empty() || bits < best_bits) {
        best_bits = std::move(bits);
        best_order = std::move(order);
      }
      return;
    }
    const auto t = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> tried;
    for (int v : cells[t]) {
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
      tried.push_back(v);
      Cells next;
      next.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != t) {
          next.push_back(cells[c]);
          continue;
        }
        next.push_back({v});
        std::vector<int> rest;
        for (int w : cells[c])
          if (w != v) rest.push_back(w);
        next.push_back(std::move(rest));
      }
      search(std::move(next));
    }
  }
};

void check_limit(const Graph& g, int limit) {
  if (g.order() > limit || g.order() > 64)
    throw TooLarge("canonical labeling limited to " + std::to_string(std::min(limit, 64)) +
                   " vertices, got " + std::to_string(g.order()));
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g, int limit) {
  check_limit(g, limit);
  const int n = g.order();
  if (n == 0) return {};
  Labeler lab(g);
  Cells start(1);
  for (int v = 0; v < n; ++v) start[0].push_back(v);
  lab.search(std::move(start));
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[lab.best_order[i]] = i;
  return perm;
}

Graph canonical_form(const Graph& g, int limit) {
  return relabel(g, canonical_labeling(g, limit));
}

std::string canonical_key(const Graph& g, int limit) {
  check_limit(g, limit);
  const int n = g.order();
  std::string key(1, static_cast<char>(n));
  if (n == 0) return key;
  Labeler lab(g);
  Cells start(1);
  for (int v = 0; v < n; ++v) start[0].push_back(v);
  lab.search(std::move(start));
  // pack the winning bit string, 8 bits per byte
  const std::string& bits = lab.best_bits;
  for (std::size_t i = 0; i < bits.size(); i += 8) {
    unsigned char byte = 0;
    for (std::size_t k = 0; k < 8; ++k)
      byte = static_cast<unsigned char>((byte << 1) | (i + k < bits.size() && bits[i + k] == '1'));
    key.push_back(static_cast<char>(byte));
  }
  return key;
}

}  // namespace starchrome
