// The Delta = 5 ribbon: hubs alternate above and below a spine path, each
// hub fanned over five consecutive rim vertices (spine vertices plus ears of
// degree 2). Its coloring repeats every six hubs with the spine advanced by
// ten vertices; kStripFigureBlocks hubs give the drawn ribbon.
#include <algorithm>
#include <array>
#include <map>

#include "starchrome/errors.hpp"
#include "starchrome/families.hpp"

namespace starchrome {
namespace {

constexpr int kA = 7, kB = 8, kC = 9;
constexpr int kLeftEar = -1, kRightEar = -2;

struct HubPattern {
  std::array<int, 5> rim;     // spine offsets, or an ear marker
  std::array<int, 5> spokes;  // hub -> rim[i]
  std::array<int, 4> links;   // rim[i] -> rim[i+1]
};

constexpr std::array<HubPattern, 6> kPeriod{{
    {{0, 1, 2, 3, kRightEar}, {2, 4, kC, kB, 5}, {kB, kA, 1, 3}},
    {{kLeftEar, 2, 3, 4, 5}, {kC, 6, 5, 4, 2}, {3, 1, kA, kC}},
    {{kLeftEar, 4, 5, 6, kRightEar}, {6, kB, 3, 1, kC}, {5, kC, 5, 4}},
    {{5, 6, 7, 8, kRightEar}, {1, kA, 6, kC, kB}, {5, kB, 5, 4}},
    {{kLeftEar, 7, 8, 9, 10}, {kC, 4, 3, 1, kA}, {2, 5, kA, 6}},
    {{kLeftEar, 9, 10, 11, kRightEar}, {5, 4, kC, 3, 6}, {kB, 6, kB, 5}},
}};
constexpr int kSpineShift = 10;

struct Ribbon {
  FamilyInstance inst;
  std::vector<RoleColor> colors;
};

Ribbon build_ribbon(int blocks) {
  if (blocks < kStripMinBlocks)
    throw BadParams("strip needs at least " + std::to_string(kStripMinBlocks) + " blocks, got " +
                    std::to_string(blocks));
  if (blocks > 10000) throw BadParams("strip block count unreasonably large");

  Ribbon r;
  std::vector<Edge> edges;
  std::map<std::pair<int, int>, int> color_of;
  auto add = [&](const std::string& role) {
    auto it = r.inst.roles.find(role);
    if (it != r.inst.roles.end()) return it->second;
    int id = static_cast<int>(r.inst.role_of.size());
    r.inst.role_of.push_back(role);
    r.inst.roles.emplace(role, id);
    return id;
  };
  auto join = [&](const std::string& a, const std::string& b, int color) {
    int x = add(a), y = add(b);
    auto key = std::minmax(x, y);
    auto [it, fresh] = color_of.emplace(key, color);
    if (!fresh) {
      // rim edges shared by neighboring hubs must agree
      if (it->second != color)
        throw PostconditionFailed("strip pattern disagrees on edge " + a + " " + b);
      return;
    }
    edges.emplace_back(x, y);
    r.colors.push_back({a, b, color});
  };

  for (int j = 0; j < blocks; ++j) {
    const HubPattern& pat = kPeriod[j % 6];
    const int base = kSpineShift * (j / 6);
    const std::string hub = "h" + std::to_string(j);
    std::array<std::string, 5> rim;
    for (int i = 0; i < 5; ++i) {
      if (pat.rim[i] == kLeftEar) rim[i] = "e" + std::to_string(j) + "L";
      else if (pat.rim[i] == kRightEar) rim[i] = "e" + std::to_string(j) + "R";
      else rim[i] = "s" + std::to_string(base + pat.rim[i]);
    }
    for (int i = 0; i < 5; ++i) join(hub, rim[i], pat.spokes[i]);
    for (int i = 0; i < 4; ++i) join(rim[i], rim[i + 1], pat.links[i]);
  }
  r.inst.id = FamilyId::Strip;
  r.inst.params.blocks = blocks;
  r.inst.graph = Graph::from_edges(static_cast<int>(r.inst.role_of.size()), edges);
  if (r.inst.graph.max_degree() != 5) throw PostconditionFailed("strip maximum degree is not 5");
  if (r.inst.graph.size() != 2 * r.inst.graph.order() - 3)
    throw PostconditionFailed("strip edge count is not 2n-3");
  return r;
}

}  // namespace

FamilyInstance delta5_strip(int blocks) { return build_ribbon(blocks).inst; }

EdgeColoring delta5_strip_coloring(int blocks) {
  Ribbon r = build_ribbon(blocks);
  return coloring_from_roles(r.inst, r.colors);
}

}  // namespace starchrome
