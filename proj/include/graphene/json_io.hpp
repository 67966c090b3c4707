// JSON serialisation of every artifact the CLI can emit.  Writers produce a
// canonical form (ordered keys, exact rationals as "p/q" strings) so that
// write(parse(write(x))) is byte-identical to write(x).
#pragma once

#include "graphene/builder.hpp"
#include "graphene/colouring.hpp"
#include "graphene/projection.hpp"
#include "graphene/refinement.hpp"
#include "graphene/verify.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace graphene {

using Json = nlohmann::ordered_json;

// Canonical text: two-space indent plus trailing newline.
std::string dumpJson(const Json& j);

Json tableToJson(const AlgebraTable& t);
Json orbitToJson(const WeightOrbit& orbit);
Json projectionToJson(const ProjectionMatrix& pr);

// Point-set schema: {"basis":"omega","scaleDen":M,"points":[[x,y],...],
// "classes":[...]} with classes taken from the stored integer coordinates.
Json pointSetToJson(const std::vector<LatticePoint>& points, long long scaleDen);

Json patchToJson(const GraphenePatch& patch);
GraphenePatch patchFromJson(const Json& j);

Json colouredPatchToJson(const ColouredPatch& coloured);
ColouredPatch colouredPatchFromJson(const Json& j);

Json refinedLatticeToJson(const RefinedLattice& lattice);
RefinedLattice refinedLatticeFromJson(const Json& j);

Json transitionGroupToJson(const TransitionGroup& group, bool includeTable);
Json proximityReportToJson(const ProximityReport& report);
Json verifyReportToJson(const VerifyReport& report);

} // namespace graphene
