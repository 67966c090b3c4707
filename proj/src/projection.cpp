#include "graphene/projection.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace graphene {

namespace {

const std::map<std::pair<AlgebraId, AlgebraId>, ProjectionMatrix>& allProjections() {
  static const std::map<std::pair<AlgebraId, AlgebraId>, ProjectionMatrix> m = [] {
    std::map<std::pair<AlgebraId, AlgebraId>, ProjectionMatrix> out;
    auto put = [&out](AlgebraId s, AlgebraId t, IntMat e) {
      out.emplace(std::make_pair(s, t), ProjectionMatrix{s, t, std::move(e)});
    };
    put(AlgebraId::G2, AlgebraId::A2, {{1, 1}, {1, 0}});
    put(AlgebraId::A3, AlgebraId::A2, {{1, 1, 0}, {0, 0, 1}});
    put(AlgebraId::B3, AlgebraId::G2, {{0, 1, 0}, {1, 0, 1}});
    put(AlgebraId::B3, AlgebraId::A3, {{0, 1, 1}, {1, 0, 0}, {0, 1, 0}});
    put(AlgebraId::B3, AlgebraId::A2, {{1, 1, 1}, {0, 1, 0}});
    put(AlgebraId::C3, AlgebraId::A2, {{1, 1, 2}, {0, 1, 0}});
    return out;
  }();
  return m;
}

} // namespace

const ProjectionMatrix& projectionMatrix(AlgebraId source, AlgebraId target) {
  const auto& all = allProjections();
  const auto it = all.find({source, target});
  if (it == all.end()) {
    throw std::invalid_argument(
        "projectionMatrix: unsupported pair " + algebraName(source) + " -> " + algebraName(target) +
        " (supported: G2->A2, A3->A2, B3->G2, B3->A3, B3->A2, C3->A2)");
  }
  return it->second;
}

WeightVector apply(const ProjectionMatrix& pr, const WeightVector& w) {
  if (w.algebra != pr.source) {
    throw std::invalid_argument("apply: weight belongs to " + algebraName(w.algebra) +
                                ", projection expects " + algebraName(pr.source));
  }
  if (w.coords.size() != pr.entries.front().size()) {
    throw std::invalid_argument("apply: coordinate count does not match projection source rank");
  }
  WeightVector out{pr.target, std::vector<Rat>(pr.entries.size(), Rat(0))};
  for (size_t i = 0; i < pr.entries.size(); ++i)
    for (size_t j = 0; j < pr.entries[i].size(); ++j)
      out.coords[i] += Rat(pr.entries[i][j]) * w.coords[j];
  return out;
}

ProjectionMatrix composeChain(const ProjectionChain& chain) {
  if (chain.hops.empty()) throw std::invalid_argument("composeChain: empty chain");
  ProjectionMatrix acc = chain.hops.front();
  for (size_t h = 1; h < chain.hops.size(); ++h) {
    const ProjectionMatrix& next = chain.hops[h];
    if (next.source != acc.target) {
      throw std::invalid_argument("composeChain: junction mismatch, hop " + std::to_string(h) +
                                  " starts at " + algebraName(next.source) + " but previous ends at " +
                                  algebraName(acc.target));
    }
    // Application order first-to-last means the combined matrix is next * acc.
    IntMat prod(next.entries.size(), std::vector<long long>(acc.entries.front().size(), 0));
    for (size_t i = 0; i < next.entries.size(); ++i)
      for (size_t j = 0; j < acc.entries.front().size(); ++j)
        for (size_t k = 0; k < acc.entries.size(); ++k)
          prod[i][j] += next.entries[i][k] * acc.entries[k][j];
    acc = ProjectionMatrix{acc.source, next.target, std::move(prod)};
  }
  return acc;
}

std::vector<WeightVector> projectOrbit(const ProjectionMatrix& pr, const WeightOrbit& orbit) {
  std::vector<WeightVector> out;
  out.reserve(orbit.elements.size());
  for (const WeightVector& w : orbit.elements) out.push_back(apply(pr, w));
  return out;
}

RatMat inverseG2A2() {
  // [[1,1],[1,0]] has determinant -1; its exact inverse is [[0,1],[1,-1]].
  return RatMat{{Rat(0), Rat(1)}, {Rat(1), Rat(-1)}};
}

WeightVector applyInverseG2A2(const WeightVector& a2Weight) {
  if (a2Weight.algebra != AlgebraId::A2) {
    throw std::invalid_argument("applyInverseG2A2: expects an A2 weight");
  }
  const RatMat inv = inverseG2A2();
  WeightVector out{AlgebraId::G2, std::vector<Rat>(2, Rat(0))};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.coords[i] += inv[i][j] * a2Weight.coords[j];
  return out;
}

WeightVector designatedLowestOrbit(AlgebraId source) {
  switch (source) {
    case AlgebraId::G2:
      return WeightVector{AlgebraId::G2, {Rat(0), Rat(1)}};
    case AlgebraId::A3:
      return WeightVector{AlgebraId::A3, {Rat(0), Rat(1), Rat(0)}};
    case AlgebraId::B3:
      return WeightVector{AlgebraId::B3, {Rat(1), Rat(0), Rat(0)}};
    case AlgebraId::C3:
      return WeightVector{AlgebraId::C3, {Rat(1), Rat(0), Rat(0)}};
    default:
      throw std::invalid_argument("designatedLowestOrbit: no designated orbit for " +
                                  algebraName(source));
  }
}

} // namespace graphene
