#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "starchrome/graph.hpp"
#include "starchrome/star_color.hpp"

namespace starchrome {

enum class FamilyId {
  Path,       // P_n
  Cycle,      // C_n
  Fan,        // F_n = K1 + P_{n-1}, n vertices in total
  G61,        // G_6^1
  G61Prime,   // G_6^1 minus v0v2, v0v3
  G62,        // G_6^2
  GDelta,     // G_6^1 with Delta-4 pendant leaves on v0, v2, v3
  HPrime,     // G_Delta closed up by the three leaf chains
  HCase1,     // G_6^2 with fans at v0, v3, v4
  H2,         // G_6^2-like core with apexes v5, v6 and fans at v2, v3
  Strip,      // the Delta = 5 ribbon of fused F_6 blocks
};

struct FamilyParams {
  int n = 0;
  int delta = 0;
  int blocks = 0;
};

struct FamilyInstance {
  FamilyId id = FamilyId::Path;
  FamilyParams params;
  Graph graph;
  std::vector<std::string> role_of;   // vertex -> role name
  std::map<std::string, int> roles;   // role name -> vertex

  int vertex(const std::string& role) const;
};

// What each family is claimed to be. nullopt diameter = not asserted.
struct FamilyClaims {
  std::optional<int> diameter;
  bool two_connected = false;
  bool outerplanar = false;
  bool maximal = false;
  int max_degree = 0;
};

const char* family_name(FamilyId id);
// Accepts the names printed by family_name, case-insensitively, plus a few
// aliases ("H'", "Hprime", "H-case-1", ...).
FamilyId parse_family(const std::string& name);
std::vector<FamilyId> all_families();

FamilyInstance build_family(FamilyId id, const FamilyParams& params);
FamilyClaims family_claims(FamilyId id, const FamilyParams& params);

// Role name of the i-th chain vertex hanging off hub "v<hub>": v<hub>^(i).
std::string leaf_role(int hub, int i);

// Closed-form colorings: H' (Delta >= 9), H case 1 (Delta >= 7),
// H2 (Delta >= 10); the Fig. 1 / Fig. 2 tables for G61 / G61'.
EdgeColoring paper_coloring(FamilyId id, const FamilyParams& params);
// Palette size the closed form is claimed to achieve.
int claimed_palette(FamilyId id, int delta);
// Smallest Delta the closed form covers, or nullopt if there is none.
std::optional<int> formula_min_delta(FamilyId id);

// Claimed bounds on chi'_st at a given Delta, as stated with each
// construction (lower, upper). nullopt when nothing is claimed.
std::optional<std::pair<int, int>> claimed_bounds(FamilyId id, int delta);

inline constexpr int kStripPeriodBlocks = 6;
inline constexpr int kStripMinBlocks = kStripPeriodBlocks;
inline constexpr int kStripFigureBlocks = 10;

FamilyInstance delta5_strip(int blocks);
EdgeColoring delta5_strip_coloring(int blocks);

// Build an EdgeColoring of inst from (roleA, roleB, color) triples; every edge
// of the instance must be listed exactly once.
struct RoleColor {
  std::string a, b;
  int color = 0;
};
EdgeColoring coloring_from_roles(const FamilyInstance& inst, const std::vector<RoleColor>& rows);

}  // namespace starchrome
