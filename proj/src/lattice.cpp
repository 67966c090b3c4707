#include "graphene/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace graphene {

int congruenceClass(LatticePoint p) {
  const long long m = (p.x + 2 * p.y) % 3;
  return static_cast<int>(m < 0 ? m + 3 : m);
}

long long normSq3(LatticePoint p) { return 2 * p.x * p.x + 2 * p.x * p.y + 2 * p.y * p.y; }

Rat normSq(LatticePoint p) { return Rat(normSq3(p), 3); }

bool inDisk(LatticePoint p, const Rat& radius, long long scaleDen) {
  // |p/M|^2 <= r^2  <=>  normSq3(p) * rden^2 <= 3 * rnum^2 * M^2
  const long long rn = radius.numerator();
  const long long rd = radius.denominator();
  return normSq3(p) * rd * rd <= 3 * rn * rn * scaleDen * scaleDen;
}

namespace {

void checkRadius(const Rat& radius, const char* where) {
  if (radius < Rat(0)) {
    throw std::invalid_argument(std::string(where) + ": radius must be >= 0, got " +
                                ratToString(radius));
  }
}

// Conservative integer bound b with: any point inside the disk has both scan
// coordinates in [-b, b].  For Q, 2(a^2 - ab + b^2) >= a^2 + b^2; for P,
// (2x^2 + 2xy + 2y^2)/3 >= (x^2 + y^2)/3.
long long scanBound(const Rat& radius, long long factorNum) {
  return factorNum * (radius.numerator() / radius.denominator()) + factorNum + 1;
}

} // namespace

std::vector<LatticePoint> qPatch(const Rat& radius) {
  checkRadius(radius, "qPatch");
  const long long bound = scanBound(radius, 1);
  const long long rows = 2 * bound + 1;
  std::vector<std::vector<LatticePoint>> perRow(rows);
  // Row-keyed partition in alpha-coordinate order; the final concatenation is
  // lexicographic in (a, b) regardless of thread count.
#pragma omp parallel for schedule(static)
  for (long long idx = 0; idx < rows; ++idx) {
    const long long a = idx - bound;
    auto& row = perRow[idx];
    for (long long b = -bound; b <= bound; ++b) {
      // alpha-coords (a, b) -> omega-coords a*alpha_1 + b*alpha_2.
      const LatticePoint p{2 * a - b, 2 * b - a};
      if (inDisk(p, radius)) row.push_back(p);
    }
  }
  std::vector<LatticePoint> out;
  for (const auto& row : perRow) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::vector<LatticePoint> pPatch(const Rat& radius) {
  checkRadius(radius, "pPatch");
  const long long bound = scanBound(radius, 2);
  const long long rows = 2 * bound + 1;
  std::vector<std::vector<LatticePoint>> perRow(rows);
#pragma omp parallel for schedule(static)
  for (long long idx = 0; idx < rows; ++idx) {
    const long long x = idx - bound;
    auto& row = perRow[idx];
    for (long long y = -bound; y <= bound; ++y) {
      const LatticePoint p{x, y};
      if (inDisk(p, radius)) row.push_back(p);
    }
  }
  std::vector<LatticePoint> out;
  for (const auto& row : perRow) out.insert(out.end(), row.begin(), row.end());
  return out;
}

bool ratPointLess(const RatPoint& a, const RatPoint& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

namespace {

struct HalfPlane {
  // Constraint (x - site, d) <= (d, d) / 2, stored as n . u <= c with
  // u = x - site and n the Gram image of d (so n . u is the exact A2 inner
  // product of u with d).
  Rat nx, ny, c;
};

HalfPlane bisector(LatticePoint d) {
  // Gram image of d = (dx, dy): ((2dx + dy)/3, (dx + 2dy)/3); rhs is |d|^2/2.
  return HalfPlane{Rat(2 * d.x + d.y, 3), Rat(d.x + 2 * d.y, 3), Rat(normSq3(d), 6)};
}

// Cross product sign in omega-coordinates agrees with the Euclidean
// orientation (the embedding has positive determinant).
int crossSign(const RatPoint& a, const RatPoint& b) {
  const Rat cr = a.x * b.y - a.y * b.x;
  if (cr > Rat(0)) return 1;
  if (cr < Rat(0)) return -1;
  return 0;
}

} // namespace

VoronoiCell voronoiCellFromOffsets(LatticePoint site, const std::vector<LatticePoint>& offsets) {
  std::vector<HalfPlane> planes;
  planes.reserve(offsets.size());
  for (LatticePoint d : offsets) {
    if (d == LatticePoint{0, 0}) continue;
    planes.push_back(bisector(d));
  }

  // Corners: feasible intersections of constraint pairs, deduplicated.
  std::vector<RatPoint> corners;
  for (size_t i = 0; i < planes.size(); ++i) {
    for (size_t j = i + 1; j < planes.size(); ++j) {
      const Rat det = planes[i].nx * planes[j].ny - planes[i].ny * planes[j].nx;
      if (det == Rat(0)) continue;
      const RatPoint u{(planes[i].c * planes[j].ny - planes[j].c * planes[i].ny) / det,
                       (planes[i].nx * planes[j].c - planes[j].nx * planes[i].c) / det};
      bool feasible = true;
      for (const HalfPlane& h : planes) {
        if (h.nx * u.x + h.ny * u.y > h.c) {
          feasible = false;
          break;
        }
      }
      if (feasible) corners.push_back(u);
    }
  }
  std::sort(corners.begin(), corners.end(), ratPointLess);
  corners.erase(std::unique(corners.begin(), corners.end()), corners.end());

  // Counterclockwise order around the site.  Split the turn at the direction
  // of omega_1, then compare by exact cross product within each half.
  auto angleRank = [](const RatPoint& v) {
    if (v.y == Rat(0)) return v.x > Rat(0) ? 0 : 2;
    return v.y > Rat(0) ? 1 : 3;
  };
  std::sort(corners.begin(), corners.end(), [&](const RatPoint& a, const RatPoint& b) {
    const int ra = angleRank(a), rb = angleRank(b);
    if (ra != rb) return ra < rb;
    return crossSign(a, b) > 0;
  });

  // Rotate so the corner with lexicographically largest coordinates leads.
  VoronoiCell cell;
  cell.site = site;
  cell.corners.reserve(corners.size());
  size_t start = 0;
  const RatPoint sitePt{Rat(site.x), Rat(site.y)};
  auto absolute = [&](const RatPoint& v) { return RatPoint{v.x + sitePt.x, v.y + sitePt.y}; };
  for (size_t i = 1; i < corners.size(); ++i) {
    if (ratPointLess(absolute(corners[start]), absolute(corners[i]))) start = i;
  }
  for (size_t i = 0; i < corners.size(); ++i) {
    cell.corners.push_back(absolute(corners[(start + i) % corners.size()]));
  }
  return cell;
}

VoronoiCell brillouinZone(LatticePoint site) {
  if (congruenceClass(site) != 0) {
    throw std::invalid_argument("brillouinZone: site (" + std::to_string(site.x) + ", " +
                                std::to_string(site.y) + ") is not in the root lattice Q");
  }
  // Nearest Q neighbours are the six roots; farther sites' bisectors cannot
  // cut the hexagon (asserted exactly in the tests).
  return voronoiCellFromOffsets(site, {kA2Roots.begin(), kA2Roots.end()});
}

std::vector<LatticePoint> voronoiVertexSet(const Rat& radius) {
  checkRadius(radius, "voronoiVertexSet");
  const std::vector<LatticePoint> sites = qPatch(radius);
  std::vector<std::array<LatticePoint, 6>> perSite(sites.size());
  // Index-aligned writes keep the merge deterministic.
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(sites.size()); ++i) {
    const VoronoiCell cell = brillouinZone(sites[i]);
    for (size_t k = 0; k < 6 && k < cell.corners.size(); ++k) {
      const RatPoint& c = cell.corners[k];
      // Brillouin corners of Q sites are weight-lattice points (the unit tests
      // pin the corner set exactly, so integrality is guaranteed here).
      assert(c.x.denominator() == 1 && c.y.denominator() == 1);
      perSite[i][k] = LatticePoint{c.x.numerator(), c.y.numerator()};
    }
  }
  std::vector<LatticePoint> out;
  out.reserve(sites.size() * 6);
  for (const auto& cs : perSite) out.insert(out.end(), cs.begin(), cs.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace graphene
