// Honeycomb patch construction by all six routes: Brillouin cells of Q,
// congruence-class deletion from P, and reflection-tiling of the projected
// hexagon from G2, A3, B3 (two chains) and C3.  All routes agree on trimmed
// disks; the equality is asserted by tests rather than assumed.
#pragma once

#include "graphene/lattice.hpp"
#include "graphene/projection.hpp"

#include <array>
#include <string>
#include <vector>

namespace graphene {

enum class BuildMethod {
  Brillouin,
  Congruence,
  ProjG2,
  ProjA3,
  ProjB3ViaG2,
  ProjB3ViaA3,
  ProjC3,
};

std::string methodName(BuildMethod m);
BuildMethod methodFromName(std::string_view name);

// One hexagonal cell: Q center plus its six corners (counterclockwise,
// starting from the lexicographically largest corner).
struct HexCell {
  LatticePoint center;
  std::array<LatticePoint, 6> vertices;

  friend bool operator==(const HexCell&, const HexCell&) = default;
};

struct GraphenePatch {
  BuildMethod method = BuildMethod::Congruence;
  Rat radius{0};
  long long scaleDen = 1;  // stored coordinates denote point / scaleDen
  int deletedClass = 0;
  long long droppedOriginWeights = 0;  // projection provenance
  std::vector<LatticePoint> vertices;  // sorted lexicographically
  std::vector<int> vertexClasses;      // parallel to vertices
  std::vector<HexCell> hexagons;       // sorted by center
};

// Hexagon at a Q center (scaleDen-aware callers pass scaled integer centers).
HexCell hexCellAt(LatticePoint center);

// Congruence-deletion tail shared by buildByCongruence and the refined
// construction: delete one class from the given lattice points, grow a hexagon
// around every deleted point, classify the rest.
GraphenePatch assembleHoneycomb(std::vector<LatticePoint> points, BuildMethod method,
                                const Rat& radius, long long scaleDen, int deletedClass);

GraphenePatch buildByBrillouin(const Rat& radius);
GraphenePatch buildByCongruence(const Rat& radius, int deletedClass = 0);
GraphenePatch buildByProjection(BuildMethod route, const Rat& radius);

// The projected A2 seed hexagon of a projection route (origin weight dropped);
// second member reports how many origin weights were dropped.
std::pair<HexCell, long long> projectedHexagon(BuildMethod route);

// Breadth-first closure of the origin hexagon under the affine Weyl generators
// {r0, r1, r2}, trimmed to the disk.  `provenance` is recorded as the method of
// the returned patch (the tiling cannot know which route produced its seed).
GraphenePatch tileHexagon(const HexCell& hex, const Rat& radius, BuildMethod provenance);

// Exact equality of vertex sets on the common trimmed disk
// min(a.radius, b.radius) - trimMargin.  Throws on scale mismatch.
bool patchesEqual(const GraphenePatch& a, const GraphenePatch& b, const Rat& trimMargin);

} // namespace graphene
