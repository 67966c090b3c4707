#include "graphene/verify.hpp"

#include "graphene/builder.hpp"
#include "graphene/colouring.hpp"
#include "graphene/lattice.hpp"
#include "graphene/projection.hpp"
#include "graphene/refinement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace graphene {

bool VerifyReport::allPass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

CheckResult sixWayEquality(const Rat& radius) {
  const Rat trim(2);
  const GraphenePatch base = buildByCongruence(radius, 0);
  const std::vector<GraphenePatch> others = {
      buildByBrillouin(radius),
      buildByProjection(BuildMethod::ProjG2, radius),
      buildByProjection(BuildMethod::ProjA3, radius),
      buildByProjection(BuildMethod::ProjB3ViaG2, radius),
      buildByProjection(BuildMethod::ProjB3ViaA3, radius),
      buildByProjection(BuildMethod::ProjC3, radius),
  };
  bool pass = true;
  for (const GraphenePatch& other : others) pass = pass && patchesEqual(base, other, trim);
  return CheckResult{"six-way-equality", pass,
                     "all 7 route labels agree on the disk of radius " + ratToString(radius) +
                         " after trimming " + ratToString(trim)};
}

CheckResult example1Projection() {
  // Per-weight images of the G2 hexagon under the G2 -> A2 projection, and the
  // split of the image into the two triangular A2 orbits.
  const ProjectionMatrix& pr = projectionMatrix(AlgebraId::G2, AlgebraId::A2);
  const std::map<std::vector<Rat>, std::vector<Rat>> expected = {
      {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}},  {{Rat(1), Rat(-1)}, {Rat(0), Rat(1)}},
      {{Rat(-1), Rat(2)}, {Rat(1), Rat(-1)}}, {{Rat(1), Rat(-2)}, {Rat(-1), Rat(1)}},
      {{Rat(-1), Rat(1)}, {Rat(0), Rat(-1)}}, {{Rat(0), Rat(-1)}, {Rat(-1), Rat(0)}},
  };
  bool pass = true;
  const WeightOrbit orbit = weylOrbit(designatedLowestOrbit(AlgebraId::G2));
  pass = pass && orbit.elements.size() == expected.size();
  std::set<std::vector<Rat>> image;
  for (const WeightVector& w : orbit.elements) {
    const auto it = expected.find(w.coords);
    const WeightVector img = apply(pr, w);
    pass = pass && it != expected.end() && img.coords == it->second;
    image.insert(img.coords);
  }
  auto orbitCoords = [](const WeightVector& dom) {
    std::set<std::vector<Rat>> out;
    for (const WeightVector& e : weylOrbit(dom).elements) out.insert(e.coords);
    return out;
  };
  const auto triangle1 = orbitCoords(WeightVector{AlgebraId::A2, {Rat(1), Rat(0)}});
  const auto triangle2 = orbitCoords(WeightVector{AlgebraId::A2, {Rat(0), Rat(1)}});
  std::set<std::vector<Rat>> unioned = triangle1;
  unioned.insert(triangle2.begin(), triangle2.end());
  pass = pass && image == unioned;
  return CheckResult{"example1-g2-projection", pass,
                     "G2 hexagon projects weight-by-weight onto the A2 hexagon, splitting into "
                     "the two triangular orbits"};
}

CheckResult example2Chains() {
  const IntMat direct{{1, 1, 1}, {0, 1, 0}};
  const ProjectionMatrix viaG2 = composeChain({{projectionMatrix(AlgebraId::B3, AlgebraId::G2),
                                                projectionMatrix(AlgebraId::G2, AlgebraId::A2)}});
  const ProjectionMatrix viaA3 = composeChain({{projectionMatrix(AlgebraId::B3, AlgebraId::A3),
                                                projectionMatrix(AlgebraId::A3, AlgebraId::A2)}});
  const bool pass = viaG2.entries == direct && viaA3.entries == direct &&
                    projectionMatrix(AlgebraId::B3, AlgebraId::A2).entries == direct;
  return CheckResult{"example2-b3-chains", pass,
                     "both B3 chains compose to [[1,1,1],[0,1,0]], matching the direct matrix"};
}

CheckResult orbitSizes() {
  bool pass = true;
  const std::vector<std::pair<WeightVector, size_t>> cases = {
      {WeightVector{AlgebraId::G2, {Rat(0), Rat(1)}}, 6},
      {WeightVector{AlgebraId::A3, {Rat(0), Rat(1), Rat(0)}}, 6},
      {WeightVector{AlgebraId::B3, {Rat(1), Rat(0), Rat(0)}}, 6},
      {WeightVector{AlgebraId::C3, {Rat(1), Rat(0), Rat(0)}}, 6},
      {WeightVector{AlgebraId::A2, {Rat(1), Rat(0)}}, 3},
      {WeightVector{AlgebraId::A2, {Rat(0), Rat(1)}}, 3},
  };
  for (const auto& [dom, size] : cases) pass = pass && weylOrbit(dom).elements.size() == size;
  return CheckResult{"orbit-sizes", pass,
                     "hexagonal orbits have 6 weights, the A2 fundamental orbits have 3"};
}

CheckResult groupAxioms(long long m) {
  const TransitionGroup g = transitionGroup(m);
  bool pass = g.order == m * m;
  const TransitionElement id = identityTransition(m);
  std::set<std::pair<long long, long long>> members;
  for (const TransitionElement& e : g.elements) members.insert({e.l1, e.l2});
  pass = pass && members.size() == g.elements.size();
  for (const TransitionElement& a : g.elements) {
    pass = pass && composeTransitions(a, id) == a && composeTransitions(id, a) == a;
    pass = pass && composeTransitions(a, inverseTransition(a)) == id;
    for (const TransitionElement& b : g.elements) {
      const TransitionElement ab = composeTransitions(a, b);
      pass = pass && members.count({ab.l1, ab.l2}) == 1;
      pass = pass && ab == composeTransitions(b, a);
      for (const TransitionElement& c : g.elements) {
        pass = pass && composeTransitions(ab, c) == composeTransitions(a, composeTransitions(b, c));
      }
    }
  }
  return CheckResult{"group-axioms-m" + std::to_string(m), pass,
                     "(Z_" + std::to_string(m) + ")^2 closure, associativity, identity, inverses, "
                     "order " + std::to_string(m * m)};
}

CheckResult fmCounts() {
  bool pass = true;
  for (long long M = 1; M <= 6; ++M) {
    const auto pts = basicTilePoints(M);
    pass = pass && static_cast<long long>(pts.size()) == (M + 1) * (M + 2) / 2;
    std::set<TilePoint> dedup(pts.begin(), pts.end());
    pass = pass && dedup.size() == pts.size();
    for (const TilePoint& t : pts) {
      pass = pass && t.s0 >= 0 && t.s1 >= 0 && t.s2 >= 0 && t.s0 + t.s1 + t.s2 == M;
    }
  }
  return CheckResult{"fm-counts", pass, "|F_M| = (M+1)(M+2)/2 for M = 1..6"};
}

} // namespace

VerifyReport verifyAll(const Rat& radius) {
  if (radius < Rat(4)) {
    throw std::invalid_argument("verifyAll: radius must be >= 4, got " + ratToString(radius));
  }
  VerifyReport report;
  report.radius = radius;
  report.checks.push_back(sixWayEquality(radius));
  report.checks.push_back(example1Projection());
  report.checks.push_back(example2Chains());
  report.checks.push_back(orbitSizes());
  report.checks.push_back(groupAxioms(2));
  report.checks.push_back(groupAxioms(3));
  report.checks.push_back(fmCounts());
  return report;
}

} // namespace graphene
