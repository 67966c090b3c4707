#include "graphene/reference.hpp"

#include <algorithm>
#include <set>

namespace graphene::reference {

namespace {

// Independent disk test: |p / M| <= r  via exact rational comparison.
bool insideDisk(LatticePoint p, const Rat& radius, long long M = 1) {
  const Rat n2 = Rat(2 * p.x * p.x + 2 * p.x * p.y + 2 * p.y * p.y, 3);
  return n2 <= radius * radius * Rat(M * M);
}

long long boxBound(const Rat& radius, long long factor) {
  return factor * (radius.numerator() / radius.denominator() + 2);
}

} // namespace

std::vector<LatticePoint> qPatchSerial(const Rat& radius) {
  std::vector<LatticePoint> out;
  const long long bound = boxBound(radius, 1);
  for (long long a = -bound; a <= bound; ++a) {
    for (long long b = -bound; b <= bound; ++b) {
      const LatticePoint p{2 * a - b, 2 * b - a};
      if (insideDisk(p, radius)) out.push_back(p);
    }
  }
  return out;
}

std::vector<LatticePoint> pPatchSerial(const Rat& radius) {
  std::vector<LatticePoint> out;
  const long long bound = boxBound(radius, 2);
  for (long long x = -bound; x <= bound; ++x) {
    for (long long y = -bound; y <= bound; ++y) {
      if (insideDisk({x, y}, radius)) out.push_back({x, y});
    }
  }
  return out;
}

std::vector<LatticePoint> voronoiVertexSetSerial(const Rat& radius) {
  std::vector<LatticePoint> out;
  for (const LatticePoint& q : qPatchSerial(radius)) {
    for (const LatticePoint& o : kHexCorner) out.push_back(q + o);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<long long> colourPatchSerial(const GraphenePatch& patch, const ColourScheme& scheme) {
  std::vector<long long> colours;
  colours.reserve(patch.hexagons.size());
  for (const HexCell& hex : patch.hexagons) colours.push_back(colourOf(hex.center, scheme));
  return colours;
}

std::vector<LatticePoint> refinedLatticeEnumerated(long long M, const Rat& radius) {
  std::vector<LatticePoint> out;
  const long long bound = boxBound(radius * Rat(M), 2);
  for (long long x = -bound; x <= bound; ++x) {
    for (long long y = -bound; y <= bound; ++y) {
      if (insideDisk({x, y}, radius, M)) out.push_back({x, y});
    }
  }
  return out;
}

GraphenePatch tileByTranslation(const Rat& radius, BuildMethod provenance) {
  GraphenePatch patch;
  patch.method = provenance;
  patch.radius = radius;
  std::vector<LatticePoint> centers = qPatchSerial(radius);
  std::sort(centers.begin(), centers.end());
  std::set<LatticePoint> vertexSet;
  for (const LatticePoint& c : centers) {
    patch.hexagons.push_back(hexCellAt(c));
    for (const LatticePoint& v : patch.hexagons.back().vertices) vertexSet.insert(v);
  }
  patch.vertices.assign(vertexSet.begin(), vertexSet.end());
  for (const LatticePoint& v : patch.vertices) patch.vertexClasses.push_back(congruenceClass(v));
  return patch;
}

} // namespace graphene::reference
