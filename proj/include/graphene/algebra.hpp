// Rank-2/3 simple Lie algebra data in the omega (fundamental weight) basis:
// Cartan matrices, weight Gram matrices, basis conversions, Weyl reflections
// and orbit closure.  Convention: row i of the Cartan matrix holds the
// omega-coordinates of the simple root alpha_i (so alpha_1 = 2*w1 - w2 in A2).
#pragma once

#include "graphene/rational.hpp"

#include <string>
#include <vector>

namespace graphene {

enum class AlgebraId { A1xA1, A2, G2, A3, B3, C3 };

using IntMat = std::vector<std::vector<long long>>;
using RatMat = std::vector<std::vector<Rat>>;

struct AlgebraTable {
  AlgebraId id;
  int rank;
  std::string name;
  IntMat cartan;         // rank x rank, integer
  RatMat cartanInverse;  // exact inverse of cartan
  RatMat gram;           // Gram matrix of the fundamental weights
};

// Static table lookup; the six supported algebras are built once.
const AlgebraTable& table(AlgebraId id);

int rank(AlgebraId id);
std::string algebraName(AlgebraId id);
// Parses names like "A2", "G2", "A1xA1" (case-insensitive).  Throws on unknown.
AlgebraId algebraFromName(std::string_view name);

// Weight in omega-coordinates / root-basis coefficient vector.  Both carry
// their algebra so mixed-algebra arithmetic can be rejected.
struct WeightVector {
  AlgebraId algebra;
  std::vector<Rat> coords;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};
struct RootVector {
  AlgebraId algebra;
  std::vector<Rat> coords;

  friend bool operator==(const RootVector&, const RootVector&) = default;
};

// Strict ordering on coords (lexicographic); used for deterministic orbit output.
bool weightLess(const WeightVector& a, const WeightVector& b);

std::string describe(const WeightVector& w);
std::string describe(const RootVector& v);

// Basis changes: omega-coords = alpha-coeffs * C (row times Cartan), and back.
WeightVector omegaFromAlpha(const RootVector& v);
RootVector alphaFromOmega(const WeightVector& w);

// Exact inner product under the algebra's weight Gram matrix.
Rat innerProduct(const WeightVector& a, const WeightVector& b);

// Simple reflection r_i, 1 <= i <= rank: x - x_i * (row i of the Cartan matrix).
WeightVector reflect(int i, const WeightVector& x);

// Affine reflection r_0 of A2 in the wall (x, alpha_0) = 1 of the highest root
// alpha_0 = alpha_1 + alpha_2; in omega-coordinates (x, y) -> (1 - y, 1 - x).
WeightVector affineReflect(const WeightVector& x);

bool isDominant(const WeightVector& w);
// Unique dominant weight in the Weyl orbit of w (sign-flip descent terminates).
WeightVector dominantRepresentative(const WeightVector& w);

struct WeightOrbit {
  WeightVector dominant;
  std::vector<WeightVector> elements;  // deduplicated, sorted by weightLess
};

// Orbit closure under the simple reflections.  Requires a dominant input; use
// dominantRepresentative first for arbitrary weights.
WeightOrbit weylOrbit(const WeightVector& dominant);

// Order of the A2 Weyl group, computed by closing {identity} under the two
// reflection matrices (not hard-coded).
int weylGroupOrderA2();
// The closed group itself, as 2x2 integer matrices acting on omega-coordinates
// (columns are images of basis weights).
std::vector<IntMat> weylGroupElementsA2();

} // namespace graphene
