#include "graphene/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphene {

std::string dumpJson(const Json& j) { return j.dump(2) + "\n"; }

namespace {

Json ratMatToJson(const RatMat& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const Rat& v : row) r.push_back(ratToString(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json intMatToJson(const IntMat& m) {
  Json rows = Json::array();
  for (const auto& row : m) rows.push_back(row);
  return rows;
}

Json coordsToJson(const std::vector<Rat>& coords) {
  Json out = Json::array();
  for (const Rat& c : coords) out.push_back(ratToString(c));
  return out;
}

Json pointToJson(const LatticePoint& p) { return Json::array({p.x, p.y}); }

LatticePoint pointFromJson(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected a point as [x, y]");
  return LatticePoint{j[0].get<long long>(), j[1].get<long long>()};
}

// Hexagon corners are stored as indices into the sorted vertex array.
Json hexagonsToJson(const GraphenePatch& patch, const std::vector<long long>* colours) {
  Json out = Json::array();
  for (size_t h = 0; h < patch.hexagons.size(); ++h) {
    const HexCell& hex = patch.hexagons[h];
    Json cell;
    cell["center"] = pointToJson(hex.center);
    Json idx = Json::array();
    for (const LatticePoint& v : hex.vertices) {
      const auto it = std::lower_bound(patch.vertices.begin(), patch.vertices.end(), v);
      if (it == patch.vertices.end() || *it != v) {
        throw std::logic_error("patchToJson: hexagon corner missing from vertex list");
      }
      idx.push_back(static_cast<long long>(it - patch.vertices.begin()));
    }
    cell["vertices"] = std::move(idx);
    if (colours) cell["colour"] = (*colours)[h];
    out.push_back(std::move(cell));
  }
  return out;
}

void patchBodyFromJson(const Json& j, GraphenePatch& patch, std::vector<long long>* colours) {
  patch.method = methodFromName(j.at("method").get<std::string>());
  patch.radius = ratFromString(j.at("radius").get<std::string>());
  patch.scaleDen = j.at("scaleDen").get<long long>();
  patch.deletedClass = j.at("deletedClass").get<int>();
  patch.droppedOriginWeights = j.at("droppedOriginWeights").get<long long>();
  for (const Json& p : j.at("vertices")) patch.vertices.push_back(pointFromJson(p));
  if (!std::is_sorted(patch.vertices.begin(), patch.vertices.end())) {
    throw std::invalid_argument("patchFromJson: vertices must be sorted lexicographically");
  }
  for (const Json& c : j.at("classes")) patch.vertexClasses.push_back(c.get<int>());
  if (patch.vertexClasses.size() != patch.vertices.size()) {
    throw std::invalid_argument("patchFromJson: classes and vertices differ in length");
  }
  for (const Json& cell : j.at("hexagons")) {
    HexCell hex;
    hex.center = pointFromJson(cell.at("center"));
    const Json& idx = cell.at("vertices");
    if (!idx.is_array() || idx.size() != 6) {
      throw std::invalid_argument("patchFromJson: hexagon must list 6 vertex indices");
    }
    for (size_t k = 0; k < 6; ++k) {
      const auto i = idx[k].get<size_t>();
      if (i >= patch.vertices.size()) throw std::invalid_argument("patchFromJson: index out of range");
      hex.vertices[k] = patch.vertices[i];
    }
    if (colours) colours->push_back(cell.at("colour").get<long long>());
    patch.hexagons.push_back(hex);
  }
}

} // namespace

Json tableToJson(const AlgebraTable& t) {
  Json j;
  j["algebra"] = t.name;
  j["rank"] = t.rank;
  j["cartan"] = intMatToJson(t.cartan);
  j["cartanInverse"] = ratMatToJson(t.cartanInverse);
  j["gram"] = ratMatToJson(t.gram);
  return j;
}

Json orbitToJson(const WeightOrbit& orbit) {
  Json j;
  j["algebra"] = algebraName(orbit.dominant.algebra);
  j["dominant"] = coordsToJson(orbit.dominant.coords);
  j["size"] = orbit.elements.size();
  Json elements = Json::array();
  for (const WeightVector& w : orbit.elements) elements.push_back(coordsToJson(w.coords));
  j["elements"] = std::move(elements);
  return j;
}

Json projectionToJson(const ProjectionMatrix& pr) {
  Json j;
  j["source"] = algebraName(pr.source);
  j["target"] = algebraName(pr.target);
  j["entries"] = intMatToJson(pr.entries);
  return j;
}

Json pointSetToJson(const std::vector<LatticePoint>& points, long long scaleDen) {
  Json j;
  j["basis"] = "omega";
  j["scaleDen"] = scaleDen;
  Json pts = Json::array();
  Json classes = Json::array();
  for (const LatticePoint& p : points) {
    pts.push_back(pointToJson(p));
    classes.push_back(congruenceClass(p));
  }
  j["points"] = std::move(pts);
  j["classes"] = std::move(classes);
  return j;
}

Json patchToJson(const GraphenePatch& patch) {
  Json j;
  j["method"] = methodName(patch.method);
  j["radius"] = ratToString(patch.radius);
  j["scaleDen"] = patch.scaleDen;
  j["deletedClass"] = patch.deletedClass;
  j["droppedOriginWeights"] = patch.droppedOriginWeights;
  Json vertices = Json::array();
  for (const LatticePoint& v : patch.vertices) vertices.push_back(pointToJson(v));
  j["vertices"] = std::move(vertices);
  j["classes"] = patch.vertexClasses;
  j["hexagons"] = hexagonsToJson(patch, nullptr);
  return j;
}

GraphenePatch patchFromJson(const Json& j) {
  GraphenePatch patch;
  patchBodyFromJson(j, patch, nullptr);
  return patch;
}

Json colouredPatchToJson(const ColouredPatch& coloured) {
  Json j;
  j["method"] = methodName(coloured.patch.method);
  j["radius"] = ratToString(coloured.patch.radius);
  j["scaleDen"] = coloured.patch.scaleDen;
  j["deletedClass"] = coloured.patch.deletedClass;
  j["droppedOriginWeights"] = coloured.patch.droppedOriginWeights;
  j["m"] = coloured.scheme.m;
  j["k1"] = coloured.scheme.k1;
  j["k2"] = coloured.scheme.k2;
  Json vertices = Json::array();
  for (const LatticePoint& v : coloured.patch.vertices) vertices.push_back(pointToJson(v));
  j["vertices"] = std::move(vertices);
  j["classes"] = coloured.patch.vertexClasses;
  j["hexagons"] = hexagonsToJson(coloured.patch, &coloured.colours);
  return j;
}

ColouredPatch colouredPatchFromJson(const Json& j) {
  ColouredPatch coloured;
  coloured.scheme.m = j.at("m").get<long long>();
  coloured.scheme.k1 = j.at("k1").get<long long>();
  coloured.scheme.k2 = j.at("k2").get<long long>();
  patchBodyFromJson(j, coloured.patch, &coloured.colours);
  return coloured;
}

Json refinedLatticeToJson(const RefinedLattice& lattice) {
  return pointSetToJson(lattice.points, lattice.M);
}

RefinedLattice refinedLatticeFromJson(const Json& j) {
  if (j.at("basis").get<std::string>() != "omega") {
    throw std::invalid_argument("refinedLatticeFromJson: unsupported basis");
  }
  RefinedLattice lattice;
  lattice.M = j.at("scaleDen").get<long long>();
  for (const Json& p : j.at("points")) lattice.points.push_back(pointFromJson(p));
  if (!std::is_sorted(lattice.points.begin(), lattice.points.end())) {
    throw std::invalid_argument("refinedLatticeFromJson: points must be sorted");
  }
  return lattice;
}

Json transitionGroupToJson(const TransitionGroup& group, bool includeTable) {
  Json j;
  j["m"] = group.m;
  j["order"] = group.order;
  Json elements = Json::array();
  for (const TransitionElement& e : group.elements) elements.push_back(Json::array({e.l1, e.l2}));
  j["elements"] = std::move(elements);
  if (includeTable) {
    Json table = Json::array();
    for (const TransitionElement& a : group.elements) {
      Json row = Json::array();
      for (const TransitionElement& b : group.elements) {
        const TransitionElement ab = composeTransitions(a, b);
        row.push_back(Json::array({ab.l1, ab.l2}));
      }
      table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
  }
  return j;
}

Json proximityReportToJson(const ProximityReport& report) {
  Json j;
  j["interiorCellCount"] = report.interiorCellCount;
  j["allCellsTriangles"] = report.allCellsTriangles;
  j["allCellsEquilateral"] = report.allCellsEquilateral;
  j["allCornersInQ"] = report.allCornersInQ;
  j["cornerSetEqualsQ"] = report.cornerSetEqualsQ;
  j["cornersPlusSitesEqualP"] = report.cornersPlusSitesEqualP;
  j["triangleEdgeSq"] = ratToString(report.triangleEdgeSq);
  j["weightTriangleEdgeSq"] = ratToString(report.weightTriangleEdgeSq);
  j["edgeRatioSq"] = ratToString(report.edgeRatioSq);
  j["refinesBasicTile"] = report.refinesBasicTile;
  return j;
}

Json verifyReportToJson(const VerifyReport& report) {
  Json j;
  j["radius"] = ratToString(report.radius);
  j["allPass"] = report.allPass();
  Json checks = Json::array();
  for (const CheckResult& c : report.checks) {
    Json entry;
    entry["name"] = c.name;
    entry["pass"] = c.pass;
    entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  j["checks"] = std::move(checks);
  return j;
}

} // namespace graphene
