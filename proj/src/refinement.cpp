#include "graphene/refinement.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace graphene {

std::vector<TilePoint> basicTilePoints(long long M) {
  if (M < 1) throw std::invalid_argument("basicTilePoints: M must be >= 1, got " + std::to_string(M));
  std::vector<TilePoint> out;
  out.reserve(static_cast<size_t>((M + 1) * (M + 2) / 2));
  for (long long s0 = 0; s0 <= M; ++s0)
    for (long long s1 = 0; s1 + s0 <= M; ++s1) out.push_back(TilePoint{s0, s1, M - s0 - s1});
  return out;
}

RefinedLattice refineLattice(long long M, const Rat& radius) {
  if (M < 1) throw std::invalid_argument("refineLattice: M must be >= 1, got " + std::to_string(M));
  if (radius < Rat(0)) throw std::invalid_argument("refineLattice: radius must be >= 0");

  // Scaled integer coordinates (denominator M): the tile point (s0, s1, s2)
  // sits at (s1, s2), and the affine generators become
  //   r1 (x, y) -> (-x, x + y),  r2 (x, y) -> (x + y, -y),
  //   r0 (x, y) -> (M - y, M - x).
  std::set<LatticePoint> seen;
  std::vector<LatticePoint> frontier;
  for (const TilePoint& t : basicTilePoints(M)) {
    const LatticePoint p{t.s1, t.s2};
    if (seen.insert(p).second) frontier.push_back(p);
  }

  const Rat grow = radius + Rat(3);
  while (!frontier.empty()) {
    std::vector<LatticePoint> next;
    for (const LatticePoint& p : frontier) {
      if (!inDisk(p, grow, M)) continue;
      const LatticePoint images[3] = {{M - p.y, M - p.x}, {-p.x, p.x + p.y}, {p.x + p.y, -p.y}};
      for (const LatticePoint& img : images) {
        if (seen.insert(img).second) next.push_back(img);
      }
    }
    frontier = std::move(next);
  }

  RefinedLattice out;
  out.M = M;
  for (const LatticePoint& p : seen) {
    if (inDisk(p, radius, M)) out.points.push_back(p);
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

GraphenePatch refinedGraphene(long long M, const Rat& radius) {
  RefinedLattice lattice = refineLattice(M, radius);
  return assembleHoneycomb(std::move(lattice.points), BuildMethod::Congruence, radius, M, 0);
}

std::vector<VoronoiCell> proximityCells(const GraphenePatch& patch) {
  if (patch.scaleDen != 1) {
    throw std::invalid_argument("proximityCells: requires an unrefined patch (scaleDen 1)");
  }
  // Candidate bisectors: every lattice direction with squared length <= 4.
  // The honeycomb cells are already pinned down by the first two shells
  // (2/3 and 2); the wider window is a safety margin, extra half-planes are
  // never active.
  std::vector<LatticePoint> window;
  for (long long dx = -2; dx <= 2; ++dx) {
    for (long long dy = -2; dy <= 2; ++dy) {
      const LatticePoint d{dx, dy};
      if (d == LatticePoint{0, 0} || normSq3(d) > 12) continue;
      window.push_back(d);
    }
  }

  const Rat interior = patch.radius - Rat(2);
  std::vector<LatticePoint> sites;
  for (const LatticePoint& v : patch.vertices) {
    if (inDisk(v, interior)) sites.push_back(v);
  }

  std::vector<VoronoiCell> cells(sites.size());
  const auto n = static_cast<long long>(sites.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) {
    std::vector<LatticePoint> offsets;
    for (const LatticePoint& d : window) {
      if (std::binary_search(patch.vertices.begin(), patch.vertices.end(), sites[i] + d)) {
        offsets.push_back(d);
      }
    }
    cells[i] = voronoiCellFromOffsets(sites[i], offsets);
  }
  return cells;
}

namespace {

Rat ratNormSq(const RatPoint& p) {
  return (Rat(2) * p.x * p.x + Rat(2) * p.x * p.y + Rat(2) * p.y * p.y) / Rat(3);
}

} // namespace

ProximityReport proximityRefinementReport(const GraphenePatch& patch) {
  if (patch.radius < Rat(6)) {
    throw std::invalid_argument(
        "proximityRefinementReport: radius must be >= 6 so the trimmed interior is meaningful");
  }
  const std::vector<VoronoiCell> cells = proximityCells(patch);

  ProximityReport report;
  report.interiorCellCount = static_cast<long long>(cells.size());
  report.allCellsTriangles = true;
  report.allCellsEquilateral = true;
  report.allCornersInQ = true;

  bool haveEdge = false;
  std::set<LatticePoint> cornerSet;
  for (const VoronoiCell& cell : cells) {
    if (cell.corners.size() != 3) {
      report.allCellsTriangles = false;
      continue;
    }
    for (size_t k = 0; k < 3; ++k) {
      const RatPoint& a = cell.corners[k];
      const RatPoint& b = cell.corners[(k + 1) % 3];
      const Rat edge = ratNormSq(RatPoint{a.x - b.x, a.y - b.y});
      if (!haveEdge) {
        report.triangleEdgeSq = edge;
        haveEdge = true;
      } else if (edge != report.triangleEdgeSq) {
        report.allCellsEquilateral = false;
      }
      if (a.x.denominator() != 1 || a.y.denominator() != 1) {
        report.allCornersInQ = false;
      } else {
        const LatticePoint c{a.x.numerator(), a.y.numerator()};
        if (congruenceClass(c) != 0) report.allCornersInQ = false;
        cornerSet.insert(c);
      }
    }
  }

  // Compare the corner set with Q (and corners plus sites with P) on a disk
  // trimmed far enough that boundary effects cannot leak in.
  const Rat rIn = patch.radius - Rat(4);
  std::vector<LatticePoint> cornersIn;
  for (const LatticePoint& c : cornerSet) {
    if (inDisk(c, rIn)) cornersIn.push_back(c);
  }
  std::vector<LatticePoint> q = qPatch(rIn);
  std::sort(q.begin(), q.end());  // qPatch orders by alpha-coordinates
  report.cornerSetEqualsQ = cornersIn == q;

  std::set<LatticePoint> cornersAndSites = cornerSet;
  for (const VoronoiCell& cell : cells) cornersAndSites.insert(cell.site);
  std::vector<LatticePoint> unionIn;
  for (const LatticePoint& p : cornersAndSites) {
    if (inDisk(p, rIn)) unionIn.push_back(p);
  }
  report.cornersPlusSitesEqualP = unionIn == pPatch(rIn);

  // The basic-tile triangle (0, w1, w2) has squared edge |w1|^2 = 2/3.
  report.weightTriangleEdgeSq = normSq(LatticePoint{1, 0});
  if (haveEdge && report.weightTriangleEdgeSq != Rat(0)) {
    report.edgeRatioSq = report.triangleEdgeSq / report.weightTriangleEdgeSq;
  }
  report.refinesBasicTile = haveEdge && report.triangleEdgeSq < report.weightTriangleEdgeSq;
  return report;
}

} // namespace graphene
