// The A2 root lattice Q and weight lattice P in integer omega-coordinates,
// congruence classes mod 3, metric disk patches, and exact Voronoi (Brillouin)
// cells cut by root bisectors.  Patch enumeration parallelises over coordinate
// rows; output order is lexicographic either way.
#pragma once

#include "graphene/rational.hpp"

#include <array>
#include <compare>
#include <vector>

namespace graphene {

// Integer omega-coordinates.  When a container carries scaleDen = M, a stored
// point p denotes p / M; the scale is patch-wide, never per point.
struct LatticePoint {
  long long x = 0;
  long long y = 0;

  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

constexpr LatticePoint operator+(LatticePoint a, LatticePoint b) {
  return {a.x + b.x, a.y + b.y};
}
constexpr LatticePoint operator-(LatticePoint a, LatticePoint b) {
  return {a.x - b.x, a.y - b.y};
}
constexpr LatticePoint operator*(long long s, LatticePoint p) { return {s * p.x, s * p.y}; }

// Congruence class (x + 2y) mod 3, reduced to {0, 1, 2}.  Class 0 is Q.
int congruenceClass(LatticePoint p);

// Three times the squared A2 length of p: (p,p) = (2x^2 + 2xy + 2y^2) / 3.
// Kept as an integer so disk membership tests stay in integer arithmetic.
long long normSq3(LatticePoint p);
Rat normSq(LatticePoint p);

// True iff |p / scaleDen| <= radius, exactly.
bool inDisk(LatticePoint p, const Rat& radius, long long scaleDen = 1);

// Q and P points inside the closed metric disk of the given radius.
// qPatch orders lexicographically by alpha-coordinates (a, b); pPatch by
// omega-coordinates.  radius must be >= 0.
std::vector<LatticePoint> qPatch(const Rat& radius);
std::vector<LatticePoint> pPatch(const Rat& radius);

// Exact rational point, used for Voronoi corners (integral for honeycomb cells,
// but proximity constructions can in principle meet at rational points).
struct RatPoint {
  Rat x{0};
  Rat y{0};

  friend bool operator==(const RatPoint&, const RatPoint&) = default;
};
bool ratPointLess(const RatPoint& a, const RatPoint& b);

// A Voronoi cell: corners in counterclockwise order, starting from the corner
// with lexicographically largest omega-coordinates.
struct VoronoiCell {
  LatticePoint site;
  std::vector<RatPoint> corners;
};

// Brillouin (Voronoi) cell of a Q-lattice site: the exact intersection of the
// six root-bisector half-planes around it.  Throws if the site is not in Q.
VoronoiCell brillouinZone(LatticePoint site);

// All cell corners of the Q sites inside the disk, deduplicated and sorted
// (computed per site in parallel, merged deterministically).  The corners are
// weight-lattice points; they are returned as integer LatticePoints.
std::vector<LatticePoint> voronoiVertexSet(const Rat& radius);

// The six counterclockwise corner offsets of a honeycomb cell around its Q
// center, starting from the lexicographically largest offset.
inline constexpr std::array<LatticePoint, 6> kHexCorner = {
    {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

// The six A2 roots in omega-coordinates.
inline constexpr std::array<LatticePoint, 6> kA2Roots = {
    {{2, -1}, {1, 1}, {-1, 2}, {-2, 1}, {-1, -1}, {1, -2}}};

// Generic exact Voronoi cell of `site` against the near sites listed by their
// integer offsets from it (offsets must span all bisectors that can touch the
// cell).  Used by brillouinZone and by the proximity-cell analysis.
VoronoiCell voronoiCellFromOffsets(LatticePoint site, const std::vector<LatticePoint>& offsets);

} // namespace graphene
