// (Z_m)^2 colouring of hexagon centers: colour(a alpha_1 + b alpha_2) =
// (k1 a + k2 b) mod m, the phase-transition group acting on the (k1, k2)
// parameters, and whole-patch colouring.
#pragma once

#include "graphene/builder.hpp"

#include <vector>

namespace graphene {

struct ColourScheme {
  long long m = 1;
  long long k1 = 0;  // representatives kept in [0, m)
  long long k2 = 0;

  friend bool operator==(const ColourScheme&, const ColourScheme&) = default;
};

struct TransitionElement {
  long long m = 1;
  long long l1 = 0;
  long long l2 = 0;

  friend bool operator==(const TransitionElement&, const TransitionElement&) = default;
};

// Colour of a Q center under the scheme; the alpha-coordinates of a Q point
// are integral, which is what makes the formula well defined.  Throws if the
// center is not in Q.
long long colourOf(LatticePoint center, const ColourScheme& scheme);

// The transition (l1, l2) sends scheme (k1, k2) to (k1 + l1, k2 + l2) mod m.
ColourScheme applyTransition(const ColourScheme& scheme, const TransitionElement& t);
TransitionElement composeTransitions(const TransitionElement& a, const TransitionElement& b);
TransitionElement inverseTransition(const TransitionElement& t);
TransitionElement identityTransition(long long m);

struct TransitionGroup {
  long long m = 1;
  std::vector<TransitionElement> elements;  // lexicographic (l1, l2)
  long long order = 0;
};

// The full group for modulus m (order m^2); m must be >= 1.
TransitionGroup transitionGroup(long long m);

// All non-trivial colourings (k1, k2) != (0, 0) in lexicographic order;
// m^2 - 1 of them.
std::vector<ColourScheme> enumerateColourings(long long m);

struct ColouredPatch {
  GraphenePatch patch;
  ColourScheme scheme;
  std::vector<long long> colours;  // parallel to patch.hexagons
};

// Colours every hexagon center (parallel kernel, index-aligned writes).
// Requires an unrefined patch with deletedClass 0, so centers lie in Q.
ColouredPatch colourPatch(const GraphenePatch& patch, const ColourScheme& scheme);

} // namespace graphene
