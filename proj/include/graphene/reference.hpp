// Serial and brute-force re-derivations of the parallel kernels and of the
// constructions, used as oracles by the tests and as the baseline in the
// benchmark.  Deliberately simple code; not part of the main library.
#pragma once

#include "graphene/builder.hpp"
#include "graphene/colouring.hpp"

#include <vector>

namespace graphene::reference {

// Plain double loops over the coordinate boxes.
std::vector<LatticePoint> qPatchSerial(const Rat& radius);
std::vector<LatticePoint> pPatchSerial(const Rat& radius);

// Origin-cell corners translated to every Q site (translation covariance),
// instead of solving the half-plane system per site.
std::vector<LatticePoint> voronoiVertexSetSerial(const Rat& radius);

// Serial per-hexagon colouring.
std::vector<long long> colourPatchSerial(const GraphenePatch& patch, const ColourScheme& scheme);

// Direct enumeration of (1/M) P inside the disk, as scaled integers: the
// affine-closure refinement must reproduce this exactly.
std::vector<LatticePoint> refinedLatticeEnumerated(long long M, const Rat& radius);

// Hexagons translated to every Q point of the disk: the reflection-tiling
// construction must reproduce this exactly.
GraphenePatch tileByTranslation(const Rat& radius, BuildMethod provenance);

} // namespace graphene::reference
