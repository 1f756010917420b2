#include "starchrome/families.hpp"

#include <algorithm>
#include <cctype>

#include "starchrome/errors.hpp"

namespace starchrome {

int FamilyInstance::vertex(const std::string& role) const {
  auto it = roles.find(role);
  if (it == roles.end()) throw OutOfRange("no vertex with role " + role);
  return it->second;
}

std::string leaf_role(int hub, int i) {
  return "v" + std::to_string(hub) + "^(" + std::to_string(i) + ")";
}

namespace {

std::string v(int i) { return "v" + std::to_string(i); }

class Builder {
 public:
  int add(const std::string& role) {
    auto it = inst_.roles.find(role);
    if (it != inst_.roles.end()) return it->second;
    int id = static_cast<int>(inst_.role_of.size());
    inst_.role_of.push_back(role);
    inst_.roles.emplace(role, id);
    return id;
  }
  void edge(const std::string& a, const std::string& b) {
    // sequenced: ids follow first appearance on every compiler
    const int x = add(a);
    const int y = add(b);
    edges_.emplace_back(x, y);
  }

  // Hub joined to leaves hub^(1..count), leaves joined consecutively.
  std::vector<std::string> fan_chain(int hub, int count) {
    std::vector<std::string> leaves;
    for (int i = 1; i <= count; ++i) {
      leaves.push_back(leaf_role(hub, i));
      edge(v(hub), leaves.back());
    }
    for (std::size_t i = 0; i + 1 < leaves.size(); ++i) edge(leaves[i], leaves[i + 1]);
    return leaves;
  }

  FamilyInstance finish(FamilyId id, const FamilyParams& p) {
    inst_.id = id;
    inst_.params = p;
    inst_.graph = Graph::from_edges(static_cast<int>(inst_.role_of.size()), edges_);
    return std::move(inst_);
  }

 private:
  FamilyInstance inst_;
  std::vector<Edge> edges_;
};

const std::vector<std::pair<int, int>> kG61 = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                               {2, 5}, {5, 3}, {3, 4}, {2, 3}};
const std::vector<std::pair<int, int>> kG62 = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {0, 4},
                                               {2, 3}, {3, 4}, {3, 5}, {4, 5}};

void add_core(Builder& b, const std::vector<std::pair<int, int>>& es) {
  for (int i = 0; i < 6; ++i) b.add(v(i));
  for (auto [x, y] : es) b.edge(v(x), v(y));
}

void need(bool ok, const std::string& what) {
  if (!ok) throw BadParams(what);
}

void assert_post(bool ok, FamilyId id, const std::string& what) {
  if (!ok) throw PostconditionFailed(std::string(family_name(id)) + ": " + what);
}

}  // namespace

const char* family_name(FamilyId id) {
  switch (id) {
    case FamilyId::Path: return "path";
    case FamilyId::Cycle: return "cycle";
    case FamilyId::Fan: return "fan";
    case FamilyId::G61: return "G61";
    case FamilyId::G61Prime: return "G61-prime";
    case FamilyId::G62: return "G62";
    case FamilyId::GDelta: return "G-delta";
    case FamilyId::HPrime: return "H-prime";
    case FamilyId::HCase1: return "H-case1";
    case FamilyId::H2: return "H2";
    case FamilyId::Strip: return "strip";
  }
  return "?";
}

std::vector<FamilyId> all_families() {
  return {FamilyId::Path,   FamilyId::Cycle,  FamilyId::Fan,    FamilyId::G61,
          FamilyId::G61Prime, FamilyId::G62,  FamilyId::GDelta, FamilyId::HPrime,
          FamilyId::HCase1, FamilyId::H2,     FamilyId::Strip};
}

FamilyId parse_family(const std::string& name) {
  std::string key;
  for (char ch : name)
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '\'')
      key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  for (FamilyId id : all_families()) {
    std::string canon;
    for (char ch : std::string(family_name(id)))
      if (std::isalnum(static_cast<unsigned char>(ch)))
        canon.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (key == canon) return id;
  }
  if (key == "h'" || key == "hp") return FamilyId::HPrime;
  if (key == "g61'") return FamilyId::G61Prime;
  if (key == "h1" || key == "hcase" || key == "h") return FamilyId::HCase1;
  if (key == "p") return FamilyId::Path;
  if (key == "c") return FamilyId::Cycle;
  if (key == "f") return FamilyId::Fan;
  throw BadParams("unknown family '" + name + "'");
}

FamilyClaims family_claims(FamilyId id, const FamilyParams& p) {
  FamilyClaims c;
  switch (id) {
    case FamilyId::Path:
      c.diameter = p.n - 1;
      c.two_connected = false;
      c.outerplanar = true;
      c.max_degree = p.n >= 3 ? 2 : p.n - 1;
      break;
    case FamilyId::Cycle:
      c.diameter = p.n / 2;
      c.two_connected = c.outerplanar = true;
      c.maximal = p.n == 3;
      c.max_degree = 2;
      break;
    case FamilyId::Fan:
      c.diameter = p.n <= 3 ? 1 : 2;
      c.two_connected = c.outerplanar = c.maximal = true;
      c.max_degree = p.n - 1;
      break;
    case FamilyId::G61:
      c.diameter = 2;
      c.two_connected = c.outerplanar = c.maximal = true;
      c.max_degree = 4;
      break;
    case FamilyId::G61Prime:
      c.diameter = 3;
      c.two_connected = c.outerplanar = true;
      c.max_degree = 3;
      break;
    case FamilyId::G62:
      c.diameter = 3;
      c.two_connected = c.outerplanar = c.maximal = true;
      c.max_degree = 4;
      break;
    case FamilyId::GDelta:
      c.diameter = p.delta == 4 ? 2 : 3;
      c.outerplanar = true;
      c.two_connected = c.maximal = p.delta == 4;
      c.max_degree = p.delta;
      break;
    case FamilyId::HPrime:
      // too many edges for an outerplanar graph: 6D-12 > 2n-3
      c.diameter = 3;
      c.two_connected = true;
      c.max_degree = p.delta;
      break;
    case FamilyId::HCase1:
    case FamilyId::H2:
      c.diameter = 3;
      c.two_connected = c.outerplanar = c.maximal = true;
      c.max_degree = p.delta;
      break;
    case FamilyId::Strip:
      c.two_connected = c.outerplanar = c.maximal = true;
      c.max_degree = 5;
      break;
  }
  return c;
}

FamilyInstance build_family(FamilyId id, const FamilyParams& p) {
  Builder b;
  FamilyInstance inst;
  switch (id) {
    case FamilyId::Path:
      need(p.n >= 1, "path needs n >= 1");
      for (int i = 0; i < p.n; ++i) b.add(v(i));
      for (int i = 0; i + 1 < p.n; ++i) b.edge(v(i), v(i + 1));
      inst = b.finish(id, p);
      break;
    case FamilyId::Cycle:
      need(p.n >= 3, "cycle needs n >= 3");
      for (int i = 0; i < p.n; ++i) b.edge(v(i), v((i + 1) % p.n));
      inst = b.finish(id, p);
      break;
    case FamilyId::Fan:
      need(p.n >= 3, "fan needs n >= 3 vertices");
      b.add(v(0));
      for (int i = 1; i < p.n; ++i) b.edge(v(0), v(i));
      for (int i = 1; i + 1 < p.n; ++i) b.edge(v(i), v(i + 1));
      inst = b.finish(id, p);
      break;
    case FamilyId::G61:
      add_core(b, kG61);
      inst = b.finish(id, p);
      break;
    case FamilyId::G61Prime: {
      add_core(b, kG61);
      inst = b.finish(id, p);
      inst.graph = without_edge(without_edge(inst.graph, 0, 2), 0, 3);
      break;
    }
    case FamilyId::G62:
      add_core(b, kG62);
      inst = b.finish(id, p);
      break;
    case FamilyId::GDelta: {
      need(p.delta >= 4, "G-delta needs Delta >= 4");
      add_core(b, kG61);
      for (int hub : {0, 2, 3})
        for (int i = 1; i <= p.delta - 4; ++i) b.edge(v(hub), leaf_role(hub, i));
      inst = b.finish(id, p);
      break;
    }
    case FamilyId::HPrime: {
      need(p.delta >= 5, "H-prime needs Delta >= 5");
      const int k = p.delta - 4;
      add_core(b, kG61);
      auto l0 = b.fan_chain(0, k);
      auto l2 = b.fan_chain(2, k);
      auto l3 = b.fan_chain(3, k);
      b.edge(v(1), l0.front());
      b.edge(l0.back(), v(4));
      b.edge(v(1), l2.front());
      b.edge(l2.back(), v(5));
      b.edge(v(5), l3.front());
      b.edge(l3.back(), v(4));
      inst = b.finish(id, p);
      break;
    }
    case FamilyId::HCase1: {
      need(p.delta >= 4, "H case 1 needs Delta >= 4");
      const int k = p.delta - 4;
      add_core(b, kG62);
      auto l0 = b.fan_chain(0, k);
      auto l3 = b.fan_chain(3, k);
      auto l4 = b.fan_chain(4, k + 1);
      if (k > 0) {
        b.edge(l0.back(), v(1));
        b.edge(l3.back(), v(5));
      }
      b.edge(v(5), l4.front());
      inst = b.finish(id, p);
      break;
    }
    case FamilyId::H2: {
      need(p.delta >= 4, "H2 needs Delta >= 4");
      const int k = p.delta - 4;
      for (int i = 0; i < 7; ++i) b.add(v(i));
      for (auto [x, y] : std::vector<std::pair<int, int>>{
               {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 5}, {3, 6}, {4, 6}})
        b.edge(v(x), v(y));
      auto l2 = b.fan_chain(2, k);
      auto l3 = b.fan_chain(3, k);
      if (k > 0) {
        b.edge(v(5), l2.front());
        b.edge(l3.back(), v(6));
      }
      inst = b.finish(id, p);
      break;
    }
    case FamilyId::Strip:
      return delta5_strip(p.blocks);
  }

  const FamilyClaims claims = family_claims(id, p);
  const Graph& g = inst.graph;
  assert_post(g.max_degree() == claims.max_degree, id, "maximum degree differs from the declared one");
  if (claims.diameter) assert_post(diameter(g) == claims.diameter, id, "diameter differs from the declared one");
  auto hub_degree = [&](int hub) { return g.degree(inst.vertex(v(hub))); };
  if (id == FamilyId::HPrime || id == FamilyId::GDelta)
    for (int hub : {0, 2, 3}) assert_post(hub_degree(hub) == p.delta, id, "hub degree");
  if (id == FamilyId::HCase1)
    for (int hub : {0, 3, 4}) assert_post(hub_degree(hub) == p.delta, id, "hub degree");
  if (id == FamilyId::H2)
    for (int hub : {2, 3}) assert_post(hub_degree(hub) == p.delta, id, "hub degree");
  return inst;
}

EdgeColoring coloring_from_roles(const FamilyInstance& inst, const std::vector<RoleColor>& rows) {
  EdgeColoring c(inst.graph);
  for (const auto& r : rows) {
    int idx = inst.graph.edge_index(inst.vertex(r.a), inst.vertex(r.b));
    if (idx < 0) throw OutOfRange("no edge " + r.a + " " + r.b + " in " + family_name(inst.id));
    if (c.color_at(idx) != 0) throw DuplicateEdge("edge " + r.a + " " + r.b + " colored twice");
    c.set_at(idx, r.color);
  }
  if (!c.is_total()) throw PartialColoring(std::string("table leaves an edge of ") + family_name(inst.id) + " uncolored");
  return c;
}

std::optional<int> formula_min_delta(FamilyId id) {
  switch (id) {
    case FamilyId::HPrime: return 9;
    case FamilyId::HCase1: return 7;
    case FamilyId::H2: return 10;
    default: return std::nullopt;
  }
}

int claimed_palette(FamilyId id, int delta) {
  switch (id) {
    case FamilyId::HPrime: return delta + 3;
    case FamilyId::HCase1: return delta + 4;
    case FamilyId::H2: return delta + 2;
    case FamilyId::G61: return 6;
    case FamilyId::G61Prime: return 4;
    case FamilyId::Strip: return 9;
    default: throw OutOfRange(std::string("no closed-form coloring for ") + family_name(id));
  }
}

std::optional<std::pair<int, int>> claimed_bounds(FamilyId id, int d) {
  switch (id) {
    case FamilyId::HPrime:
      if (d < 5) return std::nullopt;
      if (d == 5 || d == 6) return std::pair{d + 2, 9};
      if (d == 7 || d == 8) return std::pair{d + 2, 11};
      return std::pair{d + 2, d + 3};
    case FamilyId::HCase1:
      if (d < 4) return std::nullopt;
      if (d == 4) return std::pair{6, 6};
      if (d == 5) return std::pair{d, 8};
      if (d == 6) return std::pair{d, 9};
      return std::pair{d, d + 4};
    case FamilyId::H2:
      if (d < 4) return std::nullopt;
      if (d == 5) return std::pair{7, 8};
      if (d <= 8) return std::pair{d, d + 3};
      if (d == 9) return std::pair{d, 11};
      return std::pair{d, d + 2};
    case FamilyId::Strip:
      return std::pair{5, 9};
    default:
      return std::nullopt;
  }
}

EdgeColoring paper_coloring(FamilyId id, const FamilyParams& p) {
  const int D = p.delta;
  auto out_of_range = [&](int lo) {
    return OutOfRange(std::string(family_name(id)) + " closed form needs Delta >= " + std::to_string(lo) +
                      ", got " + std::to_string(D));
  };
  auto L = leaf_role;
  std::vector<RoleColor> rows;
  // Later rows overwrite earlier ones for the same edge, so explicitly
  // indexed terminal rules can follow the general index ranges.
  auto c = [&](const std::string& a, const std::string& b, int color) {
    for (auto& r : rows)
      if ((r.a == a && r.b == b) || (r.a == b && r.b == a)) {
        r.color = color;
        return;
      }
    rows.push_back({a, b, color});
  };

  switch (id) {
    case FamilyId::G61: {
      c("v0", "v1", 1), c("v1", "v2", 6), c("v0", "v4", 4), c("v0", "v3", 3), c("v3", "v5", 4);
      c("v0", "v2", 2), c("v2", "v5", 1), c("v2", "v3", 5), c("v3", "v4", 6);
      break;
    }
    case FamilyId::G61Prime: {
      c("v1", "v2", 3), c("v0", "v1", 1), c("v3", "v4", 3), c("v2", "v3", 4);
      c("v2", "v5", 1), c("v3", "v5", 2), c("v0", "v4", 2);
      break;
    }
    case FamilyId::HPrime: {
      if (D < 9) throw out_of_range(9);
      const int k = D - 4;
      c("v0", "v1", 1), c("v0", "v4", D - 2), c("v1", "v2", 2), c("v2", "v5", D + 2);
      c("v3", "v5", 1), c("v3", "v4", D + 2), c("v0", "v2", D), c("v0", "v3", D - 1);
      c("v2", "v3", D + 1);
      for (int l = 1; l <= k; ++l) {
        c("v0", L(0, l), l + 1);
        c("v2", L(2, l), l + 2);
        c("v3", L(3, l), l + 1);
      }
      c("v1", L(0, 1), D + 3);
      for (int m = 2; m <= D - 5; ++m) c(L(0, m - 1), L(0, m), m + 3);
      c(L(0, D - 5), L(0, D - 4), D + 1);
      c(L(0, D - 4), "v4", D + 3);
      c("v1", L(2, 1), 5);
      for (int n = 2; n <= D - 5; ++n) c(L(2, n - 1), L(2, n), n + 4);
      c(L(2, D - 5), L(2, D - 4), 2);
      c(L(2, D - 4), "v5", 3);
      c("v5", L(3, 1), 4);
      for (int q = 2; q <= D - 6; ++q) c(L(3, q - 1), L(3, q), q + 3);
      c(L(3, D - 6), L(3, D - 5), D + 2);
      c(L(3, D - 5), L(3, D - 4), D);
      c(L(3, D - 4), "v4", 2);
      break;
    }
    case FamilyId::HCase1: {
      if (D < 7) throw out_of_range(7);
      const int k = D - 4;
      c("v0", "v1", D - 3), c("v0", "v2", D - 2), c("v0", "v3", D + 1), c("v0", "v4", D + 2);
      c("v3", "v5", D - 1), c("v4", "v5", D + 4), c("v1", "v2", D + 3), c("v2", "v3", D);
      c("v3", "v4", D + 3);
      for (int l = 1; l <= k; ++l) c("v0", L(0, l), l);
      for (int m = 1; m <= k; ++m) c("v3", L(3, m), m + 2);
      for (int q = 1; q <= k + 1; ++q) c("v4", L(4, q), q + 2);
      // v0^(Delta-3) is v1: the chain ends on the core
      for (int l = 1; l <= k; ++l) c(L(0, l), l == k ? "v1" : L(0, l + 1), l + 3);
      for (int m = 1; m <= k - 1; ++m) c(L(3, m), L(3, m + 1), m);
      c(L(3, k), "v5", D - 4);
      for (int q = 1; q <= k; ++q) c(L(4, q), L(4, q + 1), q);
      c("v5", L(4, 1), D);
      break;
    }
    case FamilyId::H2: {
      if (D < 10) throw out_of_range(10);
      const int k = D - 4;
      c("v0", "v1", D + 2), c("v0", "v2", D - 1), c("v0", "v3", D + 1), c("v0", "v4", 5);
      c("v1", "v2", D), c("v2", "v3", D - 2), c("v3", "v4", D), c("v1", "v5", D + 1);
      c("v2", "v5", 1), c("v3", "v6", D - 3), c("v4", "v6", D + 2);
      for (int l = 1; l <= k; ++l) c("v2", L(2, l), l + 1);
      for (int m = 1; m <= k; ++m) c("v3", L(3, m), m);
      c("v5", L(2, 1), 4);
      for (int q = 1; q <= D - 6; ++q) c(L(2, q), L(2, q + 1), q + 4);
      c(L(2, D - 6), L(2, D - 5), 1);
      c(L(2, D - 5), L(2, D - 4), 2);
      for (int q = 1; q <= D - 6; ++q) c(L(3, q), L(3, q + 1), q + 3);
      c(L(3, D - 5), L(3, D - 4), 1);
      // the closed form names this edge v3^(Delta-4)v4; the chain ends at v6
      c(L(3, D - 4), "v6", 2);
      break;
    }
    default:
      throw OutOfRange(std::string("no closed-form coloring for ") + family_name(id));
  }
  return coloring_from_roles(build_family(id, p), rows);
}

}  // namespace starchrome
