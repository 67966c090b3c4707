#include "graphene/algebra.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <random>
#include <set>
#include <stdexcept>

using namespace graphene;
using testutil::w;

namespace {

RatMat ratMatMul(const RatMat& a, const RatMat& b) {
  const size_t n = a.size();
  RatMat c(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

RatMat ratIdentity(size_t n) {
  RatMat id(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) id[i][i] = Rat(1);
  return id;
}

// Leading principal minors, for positive-definiteness of the 2x2/3x3 Grams.
std::vector<Rat> principalMinors(const RatMat& g) {
  std::vector<Rat> minors;
  minors.push_back(g[0][0]);
  if (g.size() >= 2) minors.push_back(g[0][0] * g[1][1] - g[0][1] * g[1][0]);
  if (g.size() >= 3) {
    const Rat det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                    g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                    g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    minors.push_back(det);
  }
  return minors;
}

const std::vector<AlgebraId> kAll = {AlgebraId::A1xA1, AlgebraId::A2, AlgebraId::G2,
                                     AlgebraId::A3,    AlgebraId::B3, AlgebraId::C3};

} // namespace

TEST_CASE("algebra tables hold the pinned Cartan and Gram matrices") {
  CHECK(table(AlgebraId::A2).cartan == IntMat{{2, -1}, {-1, 2}});
  CHECK(table(AlgebraId::G2).cartan == IntMat{{2, -3}, {-1, 2}});
  CHECK(table(AlgebraId::A3).cartan == IntMat{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  CHECK(table(AlgebraId::B3).cartan == IntMat{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});
  CHECK(table(AlgebraId::C3).cartan == IntMat{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
  CHECK(table(AlgebraId::A1xA1).cartan == IntMat{{2, 0}, {0, 2}});

  CHECK(table(AlgebraId::A2).gram == RatMat{{Rat(2, 3), Rat(1, 3)}, {Rat(1, 3), Rat(2, 3)}});
  CHECK(table(AlgebraId::G2).gram == RatMat{{Rat(2), Rat(1)}, {Rat(1), Rat(2, 3)}});
  CHECK(table(AlgebraId::A1xA1).gram == RatMat{{Rat(1, 2), Rat(0)}, {Rat(0), Rat(1, 2)}});
  CHECK(table(AlgebraId::A3).gram == RatMat{{Rat(3, 4), Rat(1, 2), Rat(1, 4)},
                                            {Rat(1, 2), Rat(1), Rat(1, 2)},
                                            {Rat(1, 4), Rat(1, 2), Rat(3, 4)}});
  CHECK(table(AlgebraId::B3).gram ==
        RatMat{{Rat(1), Rat(1), Rat(1)}, {Rat(1), Rat(2), Rat(2)}, {Rat(1), Rat(2), Rat(3)}});
  CHECK(table(AlgebraId::C3).gram == RatMat{{Rat(1, 2), Rat(1, 2), Rat(1, 2)},
                                            {Rat(1, 2), Rat(1), Rat(1)},
                                            {Rat(1, 2), Rat(1), Rat(3, 2)}});
}

TEST_CASE("cartanInverse is the exact inverse and grams are symmetric positive definite") {
  for (AlgebraId id : kAll) {
    const AlgebraTable& t = table(id);
    RatMat cartanRat(t.cartan.size());
    for (size_t i = 0; i < t.cartan.size(); ++i)
      for (long long v : t.cartan[i]) cartanRat[i].emplace_back(v);
    CHECK(ratMatMul(cartanRat, t.cartanInverse) == ratIdentity(t.cartan.size()));

    for (size_t i = 0; i < t.gram.size(); ++i)
      for (size_t j = 0; j < t.gram.size(); ++j) CHECK(t.gram[i][j] == t.gram[j][i]);
    for (const Rat& minor : principalMinors(t.gram)) CHECK(minor > Rat(0));
  }
}

TEST_CASE("basis conversions follow the row convention") {
  // alpha_1 = 2 w1 - w2 in A2; the fundamental weight w1 is (2/3, 1/3) in the
  // root basis.
  CHECK(omegaFromAlpha(RootVector{AlgebraId::A2, {Rat(1), Rat(0)}}) ==
        w(AlgebraId::A2, {2, -1}));
  CHECK(omegaFromAlpha(RootVector{AlgebraId::A2, {Rat(0), Rat(0)}}) == w(AlgebraId::A2, {0, 0}));
  CHECK(omegaFromAlpha(RootVector{AlgebraId::A2, {Rat(2, 3), Rat(1, 3)}}) ==
        w(AlgebraId::A2, {1, 0}));
  CHECK(omegaFromAlpha(RootVector{AlgebraId::A2, {Rat(1, 3), Rat(2, 3)}}) ==
        w(AlgebraId::A2, {0, 1}));

  CHECK(alphaFromOmega(w(AlgebraId::A2, {2, -1})) == RootVector{AlgebraId::A2, {Rat(1), Rat(0)}});
  CHECK(alphaFromOmega(w(AlgebraId::A2, {1, 1})) == RootVector{AlgebraId::A2, {Rat(1), Rat(1)}});
  CHECK(alphaFromOmega(w(AlgebraId::A2, {3, 0})) == RootVector{AlgebraId::A2, {Rat(2), Rat(1)}});

  std::mt19937 rng(20260814);
  for (AlgebraId id : kAll) {
    for (int trial = 0; trial < 50; ++trial) {
      const WeightVector x = testutil::randomWeight(id, rng);
      CHECK(omegaFromAlpha(alphaFromOmega(x)) == x);
    }
  }
}

TEST_CASE("innerProduct matches the A2 weight geometry") {
  const WeightVector w1 = w(AlgebraId::A2, {1, 0});
  const WeightVector w2 = w(AlgebraId::A2, {0, 1});
  CHECK(innerProduct(w1, w1) == Rat(2, 3));
  CHECK(innerProduct(w1, w2) == Rat(1, 3));
  CHECK(innerProduct(w(AlgebraId::A2, {0, 0}), w1) == Rat(0));
  // Roots have squared length 2.
  const WeightVector a1 = w(AlgebraId::A2, {2, -1});
  CHECK(innerProduct(a1, a1) == Rat(2));
  CHECK_THROWS_AS(innerProduct(w1, w(AlgebraId::G2, {1, 0})), std::invalid_argument);
}

TEST_CASE("reflect implements the simple reflections") {
  CHECK(reflect(2, w(AlgebraId::G2, {0, 1})) == w(AlgebraId::G2, {1, -1}));
  CHECK(reflect(1, w(AlgebraId::G2, {1, -1})) == w(AlgebraId::G2, {-1, 2}));
  CHECK(reflect(1, w(AlgebraId::B3, {1, 0, 0})) == w(AlgebraId::B3, {-1, 1, 0}));
  CHECK(reflect(1, w(AlgebraId::A2, {0, 0})) == w(AlgebraId::A2, {0, 0}));
  CHECK_THROWS_AS(reflect(0, w(AlgebraId::A2, {1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(reflect(3, w(AlgebraId::A2, {1, 0})), std::invalid_argument);

  std::mt19937 rng(42);
  for (AlgebraId id : kAll) {
    for (int trial = 0; trial < 200; ++trial) {
      const WeightVector x = testutil::randomWeight(id, rng);
      for (int i = 1; i <= rank(id); ++i) {
        CHECK(reflect(i, reflect(i, x)) == x);  // involution
      }
    }
  }
}

TEST_CASE("reflect preserves innerProduct where the stored Gram is Weyl-invariant") {
  // B3 is excluded on purpose: see the companion test below.
  const std::vector<AlgebraId> invariant = {AlgebraId::A1xA1, AlgebraId::A2, AlgebraId::G2,
                                            AlgebraId::A3, AlgebraId::C3};
  std::mt19937 rng(7);
  for (AlgebraId id : invariant) {
    for (int trial = 0; trial < 100; ++trial) {
      const WeightVector x = testutil::randomWeight(id, rng);
      const WeightVector y = testutil::randomWeight(id, rng);
      for (int i = 1; i <= rank(id); ++i) {
        CHECK(innerProduct(reflect(i, x), reflect(i, y)) == innerProduct(x, y));
      }
    }
  }
}

TEST_CASE("the published B3 Gram matrix is not Weyl-invariant (documented discrepancy)") {
  // The stored B3 Gram, [[1,1,1],[1,2,2],[1,2,3]], is kept exactly as published,
  // but it is not preserved by the B3 reflections that generate the published
  // B3 hexagon orbit.  The unique invariant form for this Cartan matrix (long
  // roots normalised to squared length 2) is [[1,1,1/2],[1,2,1],[1/2,1,3/4]].
  const WeightVector w2 = w(AlgebraId::B3, {0, 1, 0});
  const WeightVector r2w2 = reflect(2, w2);
  CHECK(r2w2 == w(AlgebraId::B3, {1, -1, 2}));
  CHECK(innerProduct(w2, w2) == Rat(2));
  CHECK(innerProduct(r2w2, r2w2) == Rat(9));  // would be 2 under an invariant form

  const RatMat consistent{{Rat(1), Rat(1), Rat(1, 2)},
                          {Rat(1), Rat(2), Rat(1)},
                          {Rat(1, 2), Rat(1), Rat(3, 4)}};
  auto inner = [&](const WeightVector& a, const WeightVector& b) {
    Rat s(0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s += a.coords[i] * consistent[i][j] * b.coords[j];
    return s;
  };
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const WeightVector x = testutil::randomWeight(AlgebraId::B3, rng);
    const WeightVector y = testutil::randomWeight(AlgebraId::B3, rng);
    for (int i = 1; i <= 3; ++i) {
      CHECK(inner(reflect(i, x), reflect(i, y)) == inner(x, y));
    }
  }
}

TEST_CASE("affineReflect is the affine reflection of the A2 alcove") {
  CHECK(affineReflect(w(AlgebraId::A2, {0, 0})) == w(AlgebraId::A2, {1, 1}));
  CHECK(affineReflect(w(AlgebraId::A2, {1, 1})) == w(AlgebraId::A2, {0, 0}));
  CHECK(affineReflect(w(AlgebraId::A2, {1, 0})) == w(AlgebraId::A2, {1, 0}));
  CHECK(affineReflect(w(AlgebraId::A2, {0, 1})) == w(AlgebraId::A2, {0, 1}));
  CHECK_THROWS_AS(affineReflect(w(AlgebraId::G2, {1, 0})), std::invalid_argument);

  // Both fundamental weights sit on the reflecting wall: (w_i, alpha_0) equals
  // (alpha_0, alpha_0) / 2 exactly.
  const WeightVector alpha0 = w(AlgebraId::A2, {1, 1});
  CHECK(innerProduct(w(AlgebraId::A2, {1, 0}), alpha0) == innerProduct(alpha0, alpha0) / 2);
  CHECK(innerProduct(w(AlgebraId::A2, {0, 1}), alpha0) == innerProduct(alpha0, alpha0) / 2);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const WeightVector x = testutil::randomWeight(AlgebraId::A2, rng);
    const WeightVector y = testutil::randomWeight(AlgebraId::A2, rng);
    CHECK(affineReflect(affineReflect(x)) == x);
    // Isometry: pairwise differences keep their squared length.
    const WeightVector dx{AlgebraId::A2,
                          {x.coords[0] - y.coords[0], x.coords[1] - y.coords[1]}};
    const WeightVector rx = affineReflect(x);
    const WeightVector ry = affineReflect(y);
    const WeightVector dr{AlgebraId::A2,
                          {rx.coords[0] - ry.coords[0], rx.coords[1] - ry.coords[1]}};
    CHECK(innerProduct(dr, dr) == innerProduct(dx, dx));
  }
}

TEST_CASE("weylOrbit reproduces the published hexagonal orbits") {
  const WeightOrbit g2 = weylOrbit(w(AlgebraId::G2, {0, 1}));
  CHECK(g2.elements.size() == 6);
  CHECK(testutil::coordSet(g2) ==
        testutil::sortedCoords({{0, 1}, {1, -1}, {-1, 2}, {1, -2}, {-1, 1}, {0, -1}}));

  const WeightOrbit a3 = weylOrbit(w(AlgebraId::A3, {0, 1, 0}));
  CHECK(a3.elements.size() == 6);
  CHECK(testutil::coordSet(a3) == testutil::sortedCoords({{0, 1, 0},
                                                          {1, -1, 1},
                                                          {1, 0, -1},
                                                          {0, -1, 0},
                                                          {-1, 1, -1},
                                                          {-1, 0, 1}}));

  const WeightOrbit b3 = weylOrbit(w(AlgebraId::B3, {1, 0, 0}));
  CHECK(b3.elements.size() == 6);
  CHECK(testutil::coordSet(b3) == testutil::sortedCoords({{1, 0, 0},
                                                          {-1, 1, 0},
                                                          {0, -1, 2},
                                                          {-1, 0, 0},
                                                          {1, -1, 0},
                                                          {0, 1, -2}}));

  const WeightOrbit c3 = weylOrbit(w(AlgebraId::C3, {1, 0, 0}));
  CHECK(c3.elements.size() == 6);
  CHECK(testutil::coordSet(c3) == testutil::sortedCoords({{1, 0, 0},
                                                          {-1, 1, 0},
                                                          {0, -1, 1},
                                                          {-1, 0, 0},
                                                          {1, -1, 0},
                                                          {0, 1, -1}}));

  const WeightOrbit a2w1 = weylOrbit(w(AlgebraId::A2, {1, 0}));
  CHECK(testutil::coordSet(a2w1) == testutil::sortedCoords({{1, 0}, {-1, 1}, {0, -1}}));
  const WeightOrbit a2w2 = weylOrbit(w(AlgebraId::A2, {0, 1}));
  CHECK(testutil::coordSet(a2w2) == testutil::sortedCoords({{0, 1}, {1, -1}, {-1, 0}}));
}

TEST_CASE("weylOrbit output is closed, deduplicated and dominated by its input") {
  CHECK_THROWS_AS(weylOrbit(w(AlgebraId::A2, {-1, 2})), std::invalid_argument);

  std::mt19937 rng(11);
  for (AlgebraId id : kAll) {
    for (int trial = 0; trial < 20; ++trial) {
      const WeightVector dom = dominantRepresentative(testutil::randomWeight(id, rng));
      const WeightOrbit orbit = weylOrbit(dom);
      // Closure under every simple reflection, exactly one dominant member.
      std::set<std::vector<Rat>> members;
      for (const auto& e : orbit.elements) members.insert(e.coords);
      CHECK(members.size() == orbit.elements.size());
      int dominantCount = 0;
      for (const auto& e : orbit.elements) {
        if (isDominant(e)) ++dominantCount;
        for (int i = 1; i <= rank(id); ++i) CHECK(members.count(reflect(i, e).coords) == 1);
      }
      // The closed dominant chamber is a fundamental domain: exactly one hit.
      CHECK(dominantCount == 1);
      CHECK(members.count(dom.coords) == 1);
    }
  }
}

TEST_CASE("dominantRepresentative lands in the dominant chamber of the same orbit") {
  std::mt19937 rng(17);
  for (AlgebraId id : kAll) {
    for (int trial = 0; trial < 50; ++trial) {
      const WeightVector x = testutil::randomWeight(id, rng);
      const WeightVector dom = dominantRepresentative(x);
      CHECK(isDominant(dom));
      const WeightOrbit orbit = weylOrbit(dom);
      bool found = false;
      for (const auto& e : orbit.elements) found = found || e == x;
      CHECK(found);
    }
  }
}

TEST_CASE("the A2 Weyl group closes to six elements") {
  CHECK(weylGroupOrderA2() == 6);
  const std::vector<IntMat> group = weylGroupElementsA2();
  CHECK(group.size() == 6);

  // A generic weight has a free orbit; a fundamental weight is stabilised by
  // one reflection and sees only three images.
  auto apply = [](const IntMat& m, std::pair<long long, long long> v) {
    return std::pair<long long, long long>{m[0][0] * v.first + m[0][1] * v.second,
                                           m[1][0] * v.first + m[1][1] * v.second};
  };
  std::set<std::pair<long long, long long>> generic, fundamental;
  for (const IntMat& m : group) {
    generic.insert(apply(m, {1, 1}));
    fundamental.insert(apply(m, {1, 0}));
  }
  CHECK(generic.size() == 6);
  CHECK(fundamental.size() == 3);
}
