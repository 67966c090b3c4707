// Integer projection matrices between weight lattices (G2/A3/B3/C3 down to A2,
// and B3 through either intermediate), applied column-style to omega-coordinate
// vectors, plus the exact inverse of the G2 -> A2 projection.
#pragma once

#include "graphene/algebra.hpp"

#include <vector>

namespace graphene {

struct ProjectionMatrix {
  AlgebraId source;
  AlgebraId target;
  IntMat entries;  // rank(target) x rank(source)
};

// The six supported pairs: G2->A2, A3->A2, B3->G2, B3->A3, B3->A2, C3->A2.
// Throws std::invalid_argument for anything else, listing the supported pairs.
const ProjectionMatrix& projectionMatrix(AlgebraId source, AlgebraId target);

WeightVector apply(const ProjectionMatrix& pr, const WeightVector& w);

struct ProjectionChain {
  std::vector<ProjectionMatrix> hops;  // applied first-to-last
};

// Matrix of the whole chain: product of hop matrices in application order.
// Throws if consecutive hops do not share their junction algebra.
ProjectionMatrix composeChain(const ProjectionChain& chain);

// Orbit image, multiplicity preserved, in the orbit's element order.
std::vector<WeightVector> projectOrbit(const ProjectionMatrix& pr, const WeightOrbit& orbit);

// Exact rational inverse of the G2 -> A2 projection matrix.
RatMat inverseG2A2();
WeightVector applyInverseG2A2(const WeightVector& a2Weight);

// The dominant weight whose Weyl orbit is the designated hexagonal orbit used
// by the projection constructions (G2, A3, B3, C3 only).
WeightVector designatedLowestOrbit(AlgebraId source);

} // namespace graphene
