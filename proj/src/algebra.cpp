#include "graphene/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace graphene {

namespace {

RatMat ratFromInt(const IntMat& m) {
  RatMat out(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    out[i].reserve(m[i].size());
    for (long long v : m[i]) out[i].emplace_back(v);
  }
  return out;
}

// Exact inverse by Gauss-Jordan; the Cartan matrices are small and unimodular
// up to small determinants, so boost::rational never sees large operands.
RatMat ratInverse(const RatMat& m) {
  const size_t n = m.size();
  RatMat a = m;
  RatMat inv(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col] == Rat(0)) ++pivot;
    if (pivot == n) throw std::logic_error("ratInverse: singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rat d = a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == Rat(0)) continue;
      const Rat f = a[row][col];
      for (size_t j = 0; j < n; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

AlgebraTable makeTable(AlgebraId id, std::string name, IntMat cartan, RatMat gram) {
  AlgebraTable t;
  t.id = id;
  t.rank = static_cast<int>(cartan.size());
  t.name = std::move(name);
  t.cartan = std::move(cartan);
  t.cartanInverse = ratInverse(ratFromInt(t.cartan));
  t.gram = std::move(gram);
  return t;
}

RatMat scaled(long long num, long long den, const IntMat& m) {
  RatMat out = ratFromInt(m);
  for (auto& row : out)
    for (auto& v : row) v *= Rat(num, den);
  return out;
}

const std::map<AlgebraId, AlgebraTable>& allTables() {
  static const std::map<AlgebraId, AlgebraTable> tables = [] {
    std::map<AlgebraId, AlgebraTable> m;
    m.emplace(AlgebraId::A1xA1,
              makeTable(AlgebraId::A1xA1, "A1xA1", {{2, 0}, {0, 2}}, scaled(1, 2, {{1, 0}, {0, 1}})));
    m.emplace(AlgebraId::A2,
              makeTable(AlgebraId::A2, "A2", {{2, -1}, {-1, 2}}, scaled(1, 3, {{2, 1}, {1, 2}})));
    m.emplace(AlgebraId::G2,
              makeTable(AlgebraId::G2, "G2", {{2, -3}, {-1, 2}}, scaled(1, 3, {{6, 3}, {3, 2}})));
    m.emplace(AlgebraId::A3,
              makeTable(AlgebraId::A3, "A3", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}},
                        scaled(1, 4, {{3, 2, 1}, {2, 4, 2}, {1, 2, 3}})));
    m.emplace(AlgebraId::B3,
              makeTable(AlgebraId::B3, "B3", {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}},
                        scaled(1, 1, {{1, 1, 1}, {1, 2, 2}, {1, 2, 3}})));
    m.emplace(AlgebraId::C3,
              makeTable(AlgebraId::C3, "C3", {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}},
                        scaled(1, 2, {{1, 1, 1}, {1, 2, 2}, {1, 2, 3}})));
    return m;
  }();
  return tables;
}

void checkAlgebra(const WeightVector& w, const char* where) {
  if (static_cast<int>(w.coords.size()) != rank(w.algebra)) {
    throw std::invalid_argument(std::string(where) + ": coordinate count does not match rank of " +
                                algebraName(w.algebra));
  }
}

std::string coordsToString(const std::vector<Rat>& coords) {
  std::string out = "(";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += ratToString(coords[i]);
  }
  out += ")";
  return out;
}

} // namespace

const AlgebraTable& table(AlgebraId id) { return allTables().at(id); }

int rank(AlgebraId id) { return table(id).rank; }

std::string algebraName(AlgebraId id) { return table(id).name; }

AlgebraId algebraFromName(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (key == "A1XA1" || key == "A1A1") return AlgebraId::A1xA1;
  if (key == "A2") return AlgebraId::A2;
  if (key == "G2") return AlgebraId::G2;
  if (key == "A3") return AlgebraId::A3;
  if (key == "B3") return AlgebraId::B3;
  if (key == "C3") return AlgebraId::C3;
  throw std::invalid_argument("unknown algebra '" + std::string(name) +
                              "' (expected one of A1xA1, A2, G2, A3, B3, C3)");
}

bool weightLess(const WeightVector& a, const WeightVector& b) {
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                      b.coords.end());
}

std::string describe(const WeightVector& w) { return algebraName(w.algebra) + coordsToString(w.coords); }
std::string describe(const RootVector& v) {
  return algebraName(v.algebra) + "_alpha" + coordsToString(v.coords);
}

WeightVector omegaFromAlpha(const RootVector& v) {
  const AlgebraTable& t = table(v.algebra);
  if (static_cast<int>(v.coords.size()) != t.rank) {
    throw std::invalid_argument("omegaFromAlpha: coordinate count does not match rank");
  }
  // Row vector times Cartan matrix: alpha_i contributes row i.
  WeightVector out{v.algebra, std::vector<Rat>(t.rank, Rat(0))};
  for (int j = 0; j < t.rank; ++j)
    for (int i = 0; i < t.rank; ++i) out.coords[j] += v.coords[i] * Rat(t.cartan[i][j]);
  return out;
}

RootVector alphaFromOmega(const WeightVector& w) {
  checkAlgebra(w, "alphaFromOmega");
  const AlgebraTable& t = table(w.algebra);
  RootVector out{w.algebra, std::vector<Rat>(t.rank, Rat(0))};
  for (int j = 0; j < t.rank; ++j)
    for (int i = 0; i < t.rank; ++i) out.coords[j] += w.coords[i] * t.cartanInverse[i][j];
  return out;
}

Rat innerProduct(const WeightVector& a, const WeightVector& b) {
  if (a.algebra != b.algebra) {
    throw std::invalid_argument("innerProduct: algebra mismatch (" + algebraName(a.algebra) +
                                " vs " + algebraName(b.algebra) + ")");
  }
  checkAlgebra(a, "innerProduct");
  checkAlgebra(b, "innerProduct");
  const RatMat& g = table(a.algebra).gram;
  Rat sum(0);
  for (size_t i = 0; i < a.coords.size(); ++i)
    for (size_t j = 0; j < b.coords.size(); ++j) sum += a.coords[i] * g[i][j] * b.coords[j];
  return sum;
}

WeightVector reflect(int i, const WeightVector& x) {
  checkAlgebra(x, "reflect");
  const AlgebraTable& t = table(x.algebra);
  if (i < 1 || i > t.rank) {
    throw std::invalid_argument("reflect: index " + std::to_string(i) + " out of range 1.." +
                                std::to_string(t.rank));
  }
  WeightVector out = x;
  const Rat xi = x.coords[i - 1];
  for (int j = 0; j < t.rank; ++j) out.coords[j] -= xi * Rat(t.cartan[i - 1][j]);
  return out;
}

WeightVector affineReflect(const WeightVector& x) {
  if (x.algebra != AlgebraId::A2) {
    throw std::invalid_argument("affineReflect: defined for A2 only, got " + algebraName(x.algebra));
  }
  checkAlgebra(x, "affineReflect");
  return WeightVector{AlgebraId::A2, {Rat(1) - x.coords[1], Rat(1) - x.coords[0]}};
}

bool isDominant(const WeightVector& w) {
  checkAlgebra(w, "isDominant");
  return std::all_of(w.coords.begin(), w.coords.end(), [](const Rat& c) { return c >= Rat(0); });
}

WeightVector dominantRepresentative(const WeightVector& w) {
  checkAlgebra(w, "dominantRepresentative");
  // Reflecting at a negative coordinate strictly raises the weight; this
  // descent reaches the dominant chamber in finitely many steps.
  WeightVector cur = w;
  for (;;) {
    int neg = -1;
    for (size_t i = 0; i < cur.coords.size(); ++i) {
      if (cur.coords[i] < Rat(0)) {
        neg = static_cast<int>(i) + 1;
        break;
      }
    }
    if (neg < 0) return cur;
    cur = reflect(neg, cur);
  }
}

WeightOrbit weylOrbit(const WeightVector& dominant) {
  checkAlgebra(dominant, "weylOrbit");
  if (!isDominant(dominant)) {
    throw std::invalid_argument("weylOrbit: input must be dominant, got " + describe(dominant) +
                                " (use dominantRepresentative first)");
  }
  const int r = rank(dominant.algebra);
  std::set<std::vector<Rat>> seen{dominant.coords};
  std::vector<WeightVector> frontier{dominant};
  while (!frontier.empty()) {
    std::vector<WeightVector> next;
    for (const WeightVector& w : frontier) {
      for (int i = 1; i <= r; ++i) {
        WeightVector img = reflect(i, w);
        if (seen.insert(img.coords).second) next.push_back(std::move(img));
      }
    }
    frontier = std::move(next);
  }
  WeightOrbit orbit;
  orbit.dominant = dominant;
  orbit.elements.reserve(seen.size());
  for (const auto& coords : seen) orbit.elements.push_back(WeightVector{dominant.algebra, coords});
  return orbit;
}

namespace {

IntMat matMul2(const IntMat& a, const IntMat& b) {
  IntMat c(2, std::vector<long long>(2, 0));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

} // namespace

std::vector<IntMat> weylGroupElementsA2() {
  // Matrices of r1, r2 on omega-coordinates (columns are images of w1, w2).
  const IntMat r1{{-1, 0}, {1, 1}};
  const IntMat r2{{1, 1}, {0, -1}};
  std::set<IntMat> seen{IntMat{{1, 0}, {0, 1}}};
  std::vector<IntMat> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<IntMat> next;
    for (const IntMat& m : frontier) {
      for (const IntMat* gen : {&r1, &r2}) {
        IntMat img = matMul2(*gen, m);
        if (seen.insert(img).second) next.push_back(std::move(img));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

int weylGroupOrderA2() { return static_cast<int>(weylGroupElementsA2().size()); }

} // namespace graphene
