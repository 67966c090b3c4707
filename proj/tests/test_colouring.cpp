#include "graphene/colouring.hpp"

#include "graphene/reference.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace graphene;

TEST_CASE("colourOf evaluates (k1 a + k2 b) mod m in alpha-coordinates") {
  const ColourScheme m2{2, 1, 0};
  CHECK(colourOf({0, 0}, m2) == 0);
  CHECK(colourOf({2, -1}, m2) == 1);   // alpha1: (a, b) = (1, 0)
  CHECK(colourOf({-1, 2}, m2) == 0);   // alpha2: (a, b) = (0, 1)
  CHECK(colourOf({1, 1}, m2) == 1);    // alpha1 + alpha2
  CHECK(colourOf({-2, 1}, m2) == 1);   // -alpha1: negatives reduce into [0, m)

  const ColourScheme m3{3, 1, 2};
  CHECK(colourOf({0, 0}, m3) == 0);
  // 2 alpha1 + 3 alpha2 has omega-coordinates (1, 4); colour = 2 + 6 = 8 = 2 mod 3.
  CHECK(colourOf({1, 4}, m3) == 2);
  CHECK(colourOf({2, -1}, m3) == 1);
  CHECK(colourOf({-1, 2}, m3) == 2);

  CHECK_THROWS_AS(colourOf({1, 0}, m2), std::invalid_argument);
  CHECK_THROWS_AS(colourOf({0, 1}, m3), std::invalid_argument);
}

TEST_CASE("colourOf is additive on Q") {
  const ColourScheme scheme{5, 2, 3};
  const std::vector<LatticePoint> q = qPatch(Rat(5));
  for (size_t i = 0; i < q.size(); i += 3) {
    for (size_t j = 0; j < q.size(); j += 5) {
      CHECK(colourOf(q[i] + q[j], scheme) ==
            (colourOf(q[i], scheme) + colourOf(q[j], scheme)) % scheme.m);
    }
  }
}

TEST_CASE("transitions shift schemes componentwise mod m") {
  const ColourScheme start{4, 1, 2};
  const TransitionElement t{4, 3, 3};
  CHECK(applyTransition(start, t) == ColourScheme{4, 0, 1});
  CHECK(applyTransition(applyTransition(start, t), inverseTransition(t)) == start);
  CHECK(applyTransition(start, identityTransition(4)) == start);

  CHECK(composeTransitions(TransitionElement{4, 3, 1}, TransitionElement{4, 2, 3}) ==
        TransitionElement{4, 1, 0});
  CHECK(inverseTransition(TransitionElement{4, 0, 0}) == TransitionElement{4, 0, 0});
  CHECK(inverseTransition(TransitionElement{4, 1, 3}) == TransitionElement{4, 3, 1});

  CHECK_THROWS_AS(applyTransition(start, TransitionElement{5, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(composeTransitions(TransitionElement{2, 1, 1}, TransitionElement{3, 1, 1}),
                  std::invalid_argument);
}

TEST_CASE("the transition group satisfies all group axioms and is abelian") {
  for (long long m : {1LL, 2LL, 3LL, 4LL, 5LL, 12LL}) {
    CAPTURE(m);
    const TransitionGroup g = transitionGroup(m);
    CHECK(g.order == m * m);
    CHECK(g.elements.size() == static_cast<size_t>(m * m));

    // No duplicates, lexicographic order.
    std::set<std::pair<long long, long long>> seen;
    for (const TransitionElement& e : g.elements) seen.insert({e.l1, e.l2});
    CHECK(seen.size() == g.elements.size());

    const TransitionElement id = identityTransition(m);
    for (const TransitionElement& a : g.elements) {
      CHECK(composeTransitions(a, id) == a);
      CHECK(composeTransitions(id, a) == a);
      CHECK(composeTransitions(a, inverseTransition(a)) == id);
      for (const TransitionElement& b : g.elements) {
        const TransitionElement ab = composeTransitions(a, b);
        CHECK(seen.count({ab.l1, ab.l2}) == 1);  // closure
        CHECK(ab == composeTransitions(b, a));   // abelian
      }
    }
    // Associativity on a sample (full triple loop only for small m).
    if (m <= 3) {
      for (const TransitionElement& a : g.elements)
        for (const TransitionElement& b : g.elements)
          for (const TransitionElement& c : g.elements)
            CHECK(composeTransitions(composeTransitions(a, b), c) ==
                  composeTransitions(a, composeTransitions(b, c)));
    }
  }
  CHECK_THROWS_AS(transitionGroup(0), std::invalid_argument);
}

TEST_CASE("the group acts freely and transitively on the schemes for fixed m") {
  const long long m = 4;
  const TransitionGroup g = transitionGroup(m);
  const ColourScheme origin{m, 0, 0};
  std::set<std::pair<long long, long long>> reached;
  for (const TransitionElement& t : g.elements) {
    const ColourScheme s = applyTransition(origin, t);
    reached.insert({s.k1, s.k2});
  }
  CHECK(reached.size() == static_cast<size_t>(m * m));  // transitive and free
}

TEST_CASE("enumerateColourings lists the non-trivial schemes") {
  const std::vector<ColourScheme> m2 = enumerateColourings(2);
  CHECK(m2 == std::vector<ColourScheme>{{2, 0, 1}, {2, 1, 0}, {2, 1, 1}});

  const std::vector<ColourScheme> m3 = enumerateColourings(3);
  CHECK(m3.size() == 8);
  CHECK(m3 == std::vector<ColourScheme>{{3, 0, 1},
                                        {3, 0, 2},
                                        {3, 1, 0},
                                        {3, 1, 1},
                                        {3, 1, 2},
                                        {3, 2, 0},
                                        {3, 2, 1},
                                        {3, 2, 2}});

  CHECK(enumerateColourings(1).empty());
  CHECK(enumerateColourings(5).size() == 24);
}

TEST_CASE("colourPatch colours every hexagon and stripes along alpha1 for m=2, k=(1,0)") {
  const GraphenePatch patch = buildByCongruence(Rat(6), 0);
  const ColouredPatch coloured = colourPatch(patch, ColourScheme{2, 1, 0});
  REQUIRE(coloured.colours.size() == patch.hexagons.size());

  for (size_t i = 0; i < patch.hexagons.size(); ++i) {
    const LatticePoint c = patch.hexagons[i].center;
    CHECK(coloured.colours[i] == colourOf(c, coloured.scheme));

    // Stepping by alpha1 = (2, -1) flips the colour, stepping by alpha2 keeps it.
    const LatticePoint byAlpha1 = c + LatticePoint{2, -1};
    const LatticePoint byAlpha2 = c + LatticePoint{-1, 2};
    CHECK(colourOf(byAlpha1, coloured.scheme) == 1 - coloured.colours[i]);
    CHECK(colourOf(byAlpha2, coloured.scheme) == coloured.colours[i]);
  }
}

TEST_CASE("recolouring by a transition equals colouring with the shifted scheme") {
  const GraphenePatch patch = buildByCongruence(Rat(5), 0);
  const ColourScheme scheme{3, 1, 2};
  const TransitionElement t{3, 2, 2};
  const ColouredPatch before = colourPatch(patch, scheme);
  const ColouredPatch after = colourPatch(patch, applyTransition(scheme, t));
  for (size_t i = 0; i < before.colours.size(); ++i) {
    const LatticePoint c = patch.hexagons[i].center;
    const long long a = (2 * c.x + c.y) / 3;
    const long long b = (c.x + 2 * c.y) / 3;
    const long long shift = ((t.l1 * a + t.l2 * b) % 3 + 3) % 3;
    CHECK(after.colours[i] == (before.colours[i] + shift) % 3);
  }
}

TEST_CASE("colourPatch normalizes schemes and rejects unsuitable patches") {
  const GraphenePatch patch = buildByCongruence(Rat(4), 0);
  const ColouredPatch coloured = colourPatch(patch, ColourScheme{3, -2, 7});
  CHECK(coloured.scheme == ColourScheme{3, 1, 1});

  CHECK_THROWS_AS(colourPatch(buildByCongruence(Rat(4), 1), ColourScheme{2, 1, 0}),
                  std::invalid_argument);
  GraphenePatch scaled = patch;
  scaled.scaleDen = 2;
  CHECK_THROWS_AS(colourPatch(scaled, ColourScheme{2, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(colourPatch(patch, ColourScheme{0, 0, 0}), std::invalid_argument);
}

TEST_CASE("parallel colouring matches the serial reference") {
  const GraphenePatch patch = buildByCongruence(Rat(8), 0);
  for (const ColourScheme& scheme : {ColourScheme{2, 1, 1}, ColourScheme{3, 1, 2},
                                     ColourScheme{7, 2, 5}, ColourScheme{12, 11, 4}}) {
    CHECK(colourPatch(patch, scheme).colours == reference::colourPatchSerial(patch, scheme));
  }
}
