#include "graphene/colouring.hpp"

#include <stdexcept>

namespace graphene {

namespace {

long long mod(long long v, long long m) {
  const long long r = v % m;
  return r < 0 ? r + m : r;
}

void checkModulus(long long m, const char* where) {
  if (m < 1) {
    throw std::invalid_argument(std::string(where) + ": modulus must be >= 1, got " +
                                std::to_string(m));
  }
}

void checkSameModulus(long long a, long long b, const char* where) {
  if (a != b) {
    throw std::invalid_argument(std::string(where) + ": modulus mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
  }
}

} // namespace

long long colourOf(LatticePoint center, const ColourScheme& scheme) {
  checkModulus(scheme.m, "colourOf");
  if (congruenceClass(center) != 0) {
    throw std::invalid_argument("colourOf: center (" + std::to_string(center.x) + ", " +
                                std::to_string(center.y) + ") is not a Q point");
  }
  // alpha-coordinates of a Q point: a = (2x + y)/3, b = (x + 2y)/3, both
  // integral exactly when the congruence class is 0.
  const long long a = (2 * center.x + center.y) / 3;
  const long long b = (center.x + 2 * center.y) / 3;
  return mod(scheme.k1 * a + scheme.k2 * b, scheme.m);
}

ColourScheme applyTransition(const ColourScheme& scheme, const TransitionElement& t) {
  checkModulus(scheme.m, "applyTransition");
  checkSameModulus(scheme.m, t.m, "applyTransition");
  return ColourScheme{scheme.m, mod(scheme.k1 + t.l1, scheme.m), mod(scheme.k2 + t.l2, scheme.m)};
}

TransitionElement composeTransitions(const TransitionElement& a, const TransitionElement& b) {
  checkModulus(a.m, "composeTransitions");
  checkSameModulus(a.m, b.m, "composeTransitions");
  return TransitionElement{a.m, mod(a.l1 + b.l1, a.m), mod(a.l2 + b.l2, a.m)};
}

TransitionElement inverseTransition(const TransitionElement& t) {
  checkModulus(t.m, "inverseTransition");
  return TransitionElement{t.m, mod(-t.l1, t.m), mod(-t.l2, t.m)};
}

TransitionElement identityTransition(long long m) {
  checkModulus(m, "identityTransition");
  return TransitionElement{m, 0, 0};
}

TransitionGroup transitionGroup(long long m) {
  checkModulus(m, "transitionGroup");
  TransitionGroup g;
  g.m = m;
  g.elements.reserve(static_cast<size_t>(m * m));
  for (long long l1 = 0; l1 < m; ++l1)
    for (long long l2 = 0; l2 < m; ++l2) g.elements.push_back(TransitionElement{m, l1, l2});
  g.order = static_cast<long long>(g.elements.size());
  return g;
}

std::vector<ColourScheme> enumerateColourings(long long m) {
  checkModulus(m, "enumerateColourings");
  std::vector<ColourScheme> out;
  for (long long k1 = 0; k1 < m; ++k1) {
    for (long long k2 = 0; k2 < m; ++k2) {
      if (k1 == 0 && k2 == 0) continue;
      out.push_back(ColourScheme{m, k1, k2});
    }
  }
  return out;
}

ColouredPatch colourPatch(const GraphenePatch& patch, const ColourScheme& scheme) {
  checkModulus(scheme.m, "colourPatch");
  if (patch.scaleDen != 1 || patch.deletedClass != 0) {
    throw std::invalid_argument(
        "colourPatch: requires an unrefined patch with deletedClass 0 (centers must lie in Q)");
  }
  ColouredPatch out;
  out.patch = patch;
  out.scheme = ColourScheme{scheme.m, mod(scheme.k1, scheme.m), mod(scheme.k2, scheme.m)};
  out.colours.resize(patch.hexagons.size());
  const auto n = static_cast<long long>(patch.hexagons.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) {
    out.colours[i] = colourOf(patch.hexagons[i].center, out.scheme);
  }
  return out;
}

} // namespace graphene
