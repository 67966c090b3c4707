// Shared helpers for the unit tests: deterministic random rational weights and
// small conveniences for building exact expected values.
#pragma once

#include "graphene/algebra.hpp"

#include <random>
#include <vector>

namespace testutil {

using graphene::AlgebraId;
using graphene::Rat;
using graphene::WeightVector;

inline Rat randomRat(std::mt19937& rng) {
  std::uniform_int_distribution<long long> num(-12, 12);
  std::uniform_int_distribution<long long> den(1, 4);
  return Rat(num(rng), den(rng));
}

inline WeightVector randomWeight(AlgebraId id, std::mt19937& rng) {
  std::vector<Rat> coords;
  for (int i = 0; i < graphene::rank(id); ++i) coords.push_back(randomRat(rng));
  return WeightVector{id, std::move(coords)};
}

inline WeightVector w(AlgebraId id, std::vector<long long> ints) {
  std::vector<Rat> coords(ints.begin(), ints.end());
  return WeightVector{id, std::move(coords)};
}

// Orbit elements as a set of integer coordinate vectors, for order-free
// comparison against hand-frozen lists.
inline std::vector<std::vector<Rat>> coordSet(const graphene::WeightOrbit& orbit) {
  std::vector<std::vector<Rat>> out;
  for (const auto& e : orbit.elements) out.push_back(e.coords);
  return out;  // already sorted by construction
}

inline std::vector<std::vector<Rat>> sortedCoords(std::vector<std::vector<long long>> rows) {
  std::vector<std::vector<Rat>> out;
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace testutil
