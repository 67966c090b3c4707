#include "graphene/builder.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace graphene {

std::string methodName(BuildMethod m) {
  switch (m) {
    case BuildMethod::Brillouin: return "brillouin";
    case BuildMethod::Congruence: return "congruence";
    case BuildMethod::ProjG2: return "proj-g2";
    case BuildMethod::ProjA3: return "proj-a3";
    case BuildMethod::ProjB3ViaG2: return "proj-b3-via-g2";
    case BuildMethod::ProjB3ViaA3: return "proj-b3-via-a3";
    case BuildMethod::ProjC3: return "proj-c3";
  }
  throw std::logic_error("methodName: bad enum value");
}

BuildMethod methodFromName(std::string_view name) {
  static const std::map<std::string, BuildMethod, std::less<>> byName = {
      {"brillouin", BuildMethod::Brillouin},
      {"congruence", BuildMethod::Congruence},
      {"proj-g2", BuildMethod::ProjG2},
      {"proj-a3", BuildMethod::ProjA3},
      {"proj-b3-via-g2", BuildMethod::ProjB3ViaG2},
      {"proj-b3-via-a3", BuildMethod::ProjB3ViaA3},
      {"proj-c3", BuildMethod::ProjC3},
  };
  const auto it = byName.find(name);
  if (it == byName.end()) {
    throw std::invalid_argument("unknown build method '" + std::string(name) +
                                "' (expected brillouin, congruence, proj-g2, proj-a3, "
                                "proj-b3-via-g2, proj-b3-via-a3 or proj-c3)");
  }
  return it->second;
}

HexCell hexCellAt(LatticePoint center) {
  HexCell cell;
  cell.center = center;
  for (size_t i = 0; i < 6; ++i) cell.vertices[i] = center + kHexCorner[i];
  return cell;
}

GraphenePatch assembleHoneycomb(std::vector<LatticePoint> points, BuildMethod method,
                                const Rat& radius, long long scaleDen, int deletedClass) {
  GraphenePatch patch;
  patch.method = method;
  patch.radius = radius;
  patch.scaleDen = scaleDen;
  patch.deletedClass = deletedClass;

  std::sort(points.begin(), points.end());
  std::set<LatticePoint> vertexSet;
  for (const LatticePoint& p : points) {
    if (congruenceClass(p) == deletedClass) {
      patch.hexagons.push_back(hexCellAt(p));
    } else {
      vertexSet.insert(p);
    }
  }
  // Hexagons keep their full corner sets even at the rim, so the rim corners
  // join the vertex set (the disk filter alone would leave rim cells ragged).
  for (const HexCell& h : patch.hexagons)
    for (const LatticePoint& v : h.vertices) vertexSet.insert(v);

  patch.vertices.assign(vertexSet.begin(), vertexSet.end());
  patch.vertexClasses.reserve(patch.vertices.size());
  for (const LatticePoint& v : patch.vertices) patch.vertexClasses.push_back(congruenceClass(v));
  return patch;
}

namespace {

void checkDeletedClass(int deletedClass) {
  if (deletedClass < 0 || deletedClass > 2) {
    throw std::invalid_argument("deletedClass must be 0, 1 or 2, got " +
                                std::to_string(deletedClass));
  }
}

} // namespace

GraphenePatch buildByBrillouin(const Rat& radius) {
  const std::vector<LatticePoint> sites = qPatch(radius);
  std::vector<HexCell> cells(sites.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(sites.size()); ++i) {
    const VoronoiCell vc = brillouinZone(sites[i]);
    HexCell& cell = cells[i];
    cell.center = sites[i];
    for (size_t k = 0; k < 6 && k < vc.corners.size(); ++k) {
      cell.vertices[k] = LatticePoint{vc.corners[k].x.numerator(), vc.corners[k].y.numerator()};
    }
  }

  GraphenePatch patch;
  patch.method = BuildMethod::Brillouin;
  patch.radius = radius;
  patch.hexagons = std::move(cells);
  std::sort(patch.hexagons.begin(), patch.hexagons.end(),
            [](const HexCell& a, const HexCell& b) { return a.center < b.center; });
  std::set<LatticePoint> vertexSet;
  for (const HexCell& h : patch.hexagons)
    for (const LatticePoint& v : h.vertices) vertexSet.insert(v);
  patch.vertices.assign(vertexSet.begin(), vertexSet.end());
  for (const LatticePoint& v : patch.vertices) patch.vertexClasses.push_back(congruenceClass(v));
  return patch;
}

GraphenePatch buildByCongruence(const Rat& radius, int deletedClass) {
  checkDeletedClass(deletedClass);
  return assembleHoneycomb(pPatch(radius), BuildMethod::Congruence, radius, 1, deletedClass);
}

std::pair<HexCell, long long> projectedHexagon(BuildMethod route) {
  struct RouteSpec {
    AlgebraId source;
    std::optional<AlgebraId> via;
    bool lowestRepHasZeroWeight;  // seven-dimensional lowest representation
  };
  RouteSpec spec;
  switch (route) {
    case BuildMethod::ProjG2: spec = {AlgebraId::G2, std::nullopt, true}; break;
    case BuildMethod::ProjA3: spec = {AlgebraId::A3, std::nullopt, false}; break;
    case BuildMethod::ProjB3ViaG2: spec = {AlgebraId::B3, AlgebraId::G2, true}; break;
    case BuildMethod::ProjB3ViaA3: spec = {AlgebraId::B3, AlgebraId::A3, true}; break;
    case BuildMethod::ProjC3: spec = {AlgebraId::C3, std::nullopt, false}; break;
    default:
      throw std::invalid_argument("projectedHexagon: " + methodName(route) +
                                  " is not a projection route");
  }

  ProjectionMatrix pr = spec.via
      ? composeChain({{projectionMatrix(spec.source, *spec.via),
                       projectionMatrix(*spec.via, AlgebraId::A2)}})
      : projectionMatrix(spec.source, AlgebraId::A2);

  // Lowest weight system: the designated hexagonal orbit, plus the zero weight
  // for the seven-dimensional representations (G2, B3).
  std::vector<WeightVector> weights = weylOrbit(designatedLowestOrbit(spec.source)).elements;
  if (spec.lowestRepHasZeroWeight) {
    weights.push_back(WeightVector{spec.source, std::vector<Rat>(rank(spec.source), Rat(0))});
  }

  long long dropped = 0;
  std::set<LatticePoint> image;
  for (const WeightVector& w : weights) {
    const WeightVector img = apply(pr, w);
    if (img.coords[0] == Rat(0) && img.coords[1] == Rat(0)) {
      ++dropped;  // the origin is its own orbit; it does not seed a hexagon
      continue;
    }
    image.insert(LatticePoint{img.coords[0].numerator(), img.coords[1].numerator()});
  }

  const std::set<LatticePoint> expected(kHexCorner.begin(), kHexCorner.end());
  if (image != expected) {
    throw std::logic_error("projectedHexagon: projected weight system of " + methodName(route) +
                           " is not the unit hexagon");
  }
  return {hexCellAt({0, 0}), dropped};
}

GraphenePatch tileHexagon(const HexCell& hex, const Rat& radius, BuildMethod provenance) {
  if (!(hex == hexCellAt({0, 0}))) {
    throw std::invalid_argument("tileHexagon: seed must be the origin hexagon");
  }
  if (radius < Rat(0)) throw std::invalid_argument("tileHexagon: radius must be >= 0");

  // The affine generators map cells to cells and permute the corner offsets,
  // so the closure can track centers alone.  r0 is the reflection in the far
  // wall of the fundamental alcove; r1, r2 are linear.
  const auto g1 = [](LatticePoint p) { return LatticePoint{-p.x, p.x + p.y}; };
  const auto g2 = [](LatticePoint p) { return LatticePoint{p.x + p.y, -p.y}; };
  const auto g0 = [](LatticePoint p) { return LatticePoint{1 - p.y, 1 - p.x}; };

  // Expansion proceeds inside a slightly larger disk so that every center of
  // the target disk is reached; the tests pin the result against the direct
  // Q-translation construction, which proves the slack suffices.
  const Rat grow = radius + Rat(3);
  std::set<LatticePoint> seen{{0, 0}};
  std::vector<LatticePoint> frontier{{0, 0}};
  while (!frontier.empty()) {
    std::vector<LatticePoint> next;
    for (const LatticePoint& c : frontier) {
      if (!inDisk(c, grow)) continue;  // recorded, but not expanded
      for (const LatticePoint img : {g0(c), g1(c), g2(c)}) {
        if (seen.insert(img).second) next.push_back(img);
      }
    }
    frontier = std::move(next);
  }

  std::vector<LatticePoint> centers;
  for (const LatticePoint& c : seen) {
    if (inDisk(c, radius)) centers.push_back(c);
  }
  std::sort(centers.begin(), centers.end());

  GraphenePatch patch;
  patch.method = provenance;
  patch.radius = radius;
  std::set<LatticePoint> vertexSet;
  for (const LatticePoint& c : centers) {
    patch.hexagons.push_back(hexCellAt(c));
    for (const LatticePoint& v : patch.hexagons.back().vertices) vertexSet.insert(v);
  }
  patch.vertices.assign(vertexSet.begin(), vertexSet.end());
  for (const LatticePoint& v : patch.vertices) patch.vertexClasses.push_back(congruenceClass(v));
  return patch;
}

GraphenePatch buildByProjection(BuildMethod route, const Rat& radius) {
  const auto [hex, dropped] = projectedHexagon(route);
  GraphenePatch patch = tileHexagon(hex, radius, route);
  patch.droppedOriginWeights = dropped;
  return patch;
}

bool patchesEqual(const GraphenePatch& a, const GraphenePatch& b, const Rat& trimMargin) {
  if (a.scaleDen != b.scaleDen) {
    throw std::invalid_argument("patchesEqual: scale mismatch (" + std::to_string(a.scaleDen) +
                                " vs " + std::to_string(b.scaleDen) + ")");
  }
  const Rat rim = std::min(a.radius, b.radius) - trimMargin;
  if (rim < Rat(0)) return true;  // the common trimmed disk is empty
  auto trimmed = [&](const GraphenePatch& p) {
    std::vector<LatticePoint> kept;
    for (const LatticePoint& v : p.vertices) {
      if (inDisk(v, rim, p.scaleDen)) kept.push_back(v);
    }
    return kept;  // input is sorted, so this is too
  };
  return trimmed(a) == trimmed(b);
}

} // namespace graphene
