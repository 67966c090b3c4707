// Command-line front end: constructs honeycomb patches by any route, colours
// and refines them, replays the cross-construction verification, and renders
// SVG.  Every subcommand accepts --json for machine output.  Exit codes:
// 0 success, 1 verification failure, 2 usage or input error.

#include "graphene/json_io.hpp"
#include "graphene/reference.hpp"
#include "graphene/render.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace graphene;

struct VerificationFailed {};

Rat parseRadius(const std::string& text) {
  const Rat r = ratFromString(text);
  if (r < Rat(0)) throw std::invalid_argument("radius must be >= 0");
  return r;
}

std::vector<Rat> parseCoords(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(ratFromString(item));
  if (out.empty()) throw std::invalid_argument("empty coordinate list");
  return out;
}

Json readJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

void writeTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text;
}

std::string patchSummary(const GraphenePatch& p) {
  std::ostringstream os;
  os << methodName(p.method) << " patch, radius " << ratToString(p.radius) << ", scaleDen "
     << p.scaleDen << ", deleted class " << p.deletedClass << ": " << p.vertices.size()
     << " vertices, " << p.hexagons.size() << " hexagons";
  if (p.droppedOriginWeights > 0) {
    os << " (" << p.droppedOriginWeights << " origin weight dropped before tiling)";
  }
  os << "\n";
  return os.str();
}

void addTables(CLI::App& app) {
  auto opts = std::make_shared<std::pair<std::string, bool>>();
  CLI::App* sub = app.add_subcommand("tables", "Print the Cartan and Gram tables");
  sub->add_option("--algebra", opts->first, "Limit to one algebra (A1xA1, A2, G2, A3, B3, C3)");
  sub->add_flag("--json", opts->second, "Machine output");
  sub->callback([opts] {
    const std::vector<AlgebraId> ids =
        opts->first.empty()
            ? std::vector<AlgebraId>{AlgebraId::A1xA1, AlgebraId::A2, AlgebraId::G2,
                                     AlgebraId::A3,    AlgebraId::B3, AlgebraId::C3}
            : std::vector<AlgebraId>{algebraFromName(opts->first)};
    if (opts->second) {
      Json all = Json::array();
      for (AlgebraId id : ids) all.push_back(tableToJson(table(id)));
      std::cout << dumpJson(all);
      return;
    }
    for (AlgebraId id : ids) {
      const AlgebraTable& t = table(id);
      std::cout << t.name << " (rank " << t.rank << ")\n  cartan:";
      for (const auto& row : t.cartan) {
        std::cout << " [";
        for (size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
        std::cout << "]";
      }
      std::cout << "\n  gram:  ";
      for (const auto& row : t.gram) {
        std::cout << " [";
        for (size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << ratToString(row[j]);
        std::cout << "]";
      }
      std::cout << "\n";
    }
  });
}

void addOrbit(CLI::App& app) {
  struct Opts {
    std::string algebra, weight;
    bool json = false;
  };
  auto opts = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("orbit", "Weyl orbit of a dominant weight");
  sub->add_option("algebra", opts->algebra, "Algebra name")->required();
  sub->add_option("weight", opts->weight, "Dominant weight, comma-separated omega-coordinates")
      ->required();
  sub->add_flag("--json", opts->json, "Machine output");
  sub->callback([opts] {
    const WeightVector dom{algebraFromName(opts->algebra), parseCoords(opts->weight)};
    const WeightOrbit orbit = weylOrbit(dom);
    if (opts->json) {
      std::cout << dumpJson(orbitToJson(orbit));
      return;
    }
    std::cout << "orbit of " << describe(dom) << ": " << orbit.elements.size() << " weights\n";
    for (const WeightVector& w : orbit.elements) std::cout << "  " << describe(w) << "\n";
  });
}

void addProject(CLI::App& app) {
  struct Opts {
    std::string source, chain;
    bool showMatrix = false, json = false;
  };
  auto opts = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("project", "Project a designated lowest orbit to A2");
  sub->add_option("source", opts->source, "Source algebra (G2, A3, B3, C3)")->required();
  sub->add_option("--chain", opts->chain, "Intermediate algebra for B3 (G2 or A3)");
  sub->add_flag("--show-matrix", opts->showMatrix, "Include the projection matrix");
  sub->add_flag("--json", opts->json, "Machine output");
  sub->callback([opts] {
    const AlgebraId source = algebraFromName(opts->source);
    ProjectionMatrix pr = opts->chain.empty()
        ? projectionMatrix(source, AlgebraId::A2)
        : composeChain({{projectionMatrix(source, algebraFromName(opts->chain)),
                         projectionMatrix(algebraFromName(opts->chain), AlgebraId::A2)}});
    const WeightOrbit orbit = weylOrbit(designatedLowestOrbit(source));
    const std::vector<WeightVector> image = projectOrbit(pr, orbit);
    if (opts->json) {
      Json j;
      j["source"] = algebraName(source);
      if (!opts->chain.empty()) j["chain"] = opts->chain;
      if (opts->showMatrix) j["matrix"] = projectionToJson(pr)["entries"];
      j["orbit"] = orbitToJson(orbit)["elements"];
      Json img = Json::array();
      for (const WeightVector& w : image) {
        Json coords = Json::array();
        for (const Rat& c : w.coords) coords.push_back(ratToString(c));
        img.push_back(std::move(coords));
      }
      j["image"] = std::move(img);
      std::cout << dumpJson(j);
      return;
    }
    if (opts->showMatrix) {
      std::cout << "matrix " << algebraName(pr.source) << " -> " << algebraName(pr.target) << ":";
      for (const auto& row : pr.entries) {
        std::cout << " [";
        for (size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
        std::cout << "]";
      }
      std::cout << "\n";
    }
    for (size_t i = 0; i < orbit.elements.size(); ++i) {
      std::cout << describe(orbit.elements[i]) << " -> " << describe(image[i]) << "\n";
    }
  });
}

void addBuild(CLI::App& app) {
  struct Opts {
    std::string method, radius, out;
    int deletedClass = 0;
    bool json = false;
  };
  auto opts = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("build", "Construct a honeycomb patch by one route");
  sub->add_option("method", opts->method,
                  "brillouin | congruence | proj-g2 | proj-a3 | proj-b3-via-g2 | "
                  "proj-b3-via-a3 | proj-c3")
      ->required();
  sub->add_option("--radius", opts->radius, "Disk radius (rational, e.g. 10 or 21/2)")->required();
  sub->add_option("--deleted-class", opts->deletedClass, "Deleted congruence class (congruence route)");
  sub->add_option("--out", opts->out, "Write the patch JSON to a file");
  sub->add_flag("--json", opts->json, "Print the patch JSON to stdout");
  sub->callback([opts] {
    const BuildMethod method = methodFromName(opts->method);
    const Rat radius = parseRadius(opts->radius);
    GraphenePatch patch;
    switch (method) {
      case BuildMethod::Brillouin: patch = buildByBrillouin(radius); break;
      case BuildMethod::Congruence: patch = buildByCongruence(radius, opts->deletedClass); break;
      default: patch = buildByProjection(method, radius); break;
    }
    const std::string jsonText = dumpJson(patchToJson(patch));
    if (!opts->out.empty()) writeTextFile(opts->out, jsonText);
    if (opts->json) {
      std::cout << jsonText;
    } else {
      std::cout << patchSummary(patch);
    }
  });
}

void addColour(CLI::App& app) {
  struct Opts {
    long long m = 0, k1 = 0, k2 = 0;
    std::string radius = "6", in, out;
    bool json = false;
  };
  auto opts = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("colour", "Colour hexagons with (k1 a + k2 b) mod m");
  sub->add_option("--m", opts->m, "Modulus")->required();
  sub->add_option("--k1", opts->k1, "Coefficient of a")->required();
  sub->add_option("--k2", opts->k2, "Coefficient of b")->required();
  sub->add_option("--radius", opts->radius, "Disk radius when building a fresh patch");
  sub->add_option("--in", opts->in, "Colour an existing patch JSON instead of building one");
  sub->add_option("--out", opts->out, "Write the coloured patch JSON to a file");
  sub->add_flag("--json", opts->json, "Print the coloured patch JSON to stdout");
  sub->callback([opts] {
    const GraphenePatch patch = opts->in.empty()
        ? buildByCongruence(parseRadius(opts->radius), 0)
        : patchFromJson(readJsonFile(opts->in));
    const ColouredPatch coloured = colourPatch(patch, ColourScheme{opts->m, opts->k1, opts->k2});
    const std::string jsonText = dumpJson(colouredPatchToJson(coloured));
    if (!opts->out.empty()) writeTextFile(opts->out, jsonText);
    if (opts->json) {
      std::cout << jsonText;
    } else {
      std::vector<long long> counts(static_cast<size_t>(coloured.scheme.m), 0);
      for (long long c : coloured.colours) ++counts[static_cast<size_t>(c)];
      std::cout << "coloured " << coloured.colours.size() << " hexagons with m=" << opts->m
                << " k1=" << coloured.scheme.k1 << " k2=" << coloured.scheme.k2 << "; counts:";
      for (size_t c = 0; c < counts.size(); ++c) std::cout << " " << c << ":" << counts[c];
      std::cout << "\n";
    }
  });
}

void addTransition(CLI::App& app) {
  struct Opts {
    long long m = 0, l1 = 0, l2 = 0, k1 = 0, k2 = 0;
    bool json = false;
  };
  auto opts = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("transition", "Apply a phase transition to a colouring");
  sub->add_option("--m", opts->m, "Modulus")->required();
  sub->add_option("--l1", opts->l1, "Transition component 1")->required();
  sub->add_option("--l2", opts->l2, "Transition component 2")->required();
  sub->add_option("--k1", opts->k1, "Starting scheme coefficient 1");
  sub->add_option("--k2", opts->k2, "Starting scheme coefficient 2");
  sub->add_flag("--json", opts->json, "Machine output");
  sub->callback([opts] {
    const ColourScheme from{opts->m, opts->k1, opts->k2};
    const TransitionElement t{opts->m, opts->l1, opts->l2};
    const ColourScheme to = applyTransition(from, t);
    const TransitionElement inv = inverseTransition(t);
    if (opts->json) {
      Json j;
      j["m"] = opts->m;
      j["from"] = Json::array({from.k1, from.k2});
      j["transition"] = Json::array({t.l1, t.l2});
      j["to"] = Json::array({to.k1, to.k2});
      j["inverse"] = Json::array({inv.l1, inv.l2});
      std::cout << dumpJson(j);
      return;
    }
    std::cout << "(" << from.k1 << ", " << from.k2 << ") --(" << t.l1 << ", " << t.l2 << ")--> ("
              << to.k1 << ", " << to.k2 << ")   inverse transition: (" << inv.l1 << ", " << inv.l2
              << ")\n";
  });
}

void addGroup(CLI::App& app) {
  struct Opts {
    long long m = 0;
    bool table = false, json = false;
  };
  auto opts = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("group", "The phase-transition group (Z_m)^2");
  sub->add_option("--m", opts->m, "Modulus")->required();
  sub->add_flag("--table", opts->table, "Include the composition table");
  sub->add_flag("--json", opts->json, "Machine output");
  sub->callback([opts] {
    const TransitionGroup g = transitionGroup(opts->m);
    if (opts->json) {
      std::cout << dumpJson(transitionGroupToJson(g, opts->table));
      return;
    }
    std::cout << "(Z_" << g.m << ")^2: order " << g.order << ", abelian\n";
    if (opts->table) {
      for (const TransitionElement& a : g.elements) {
        for (const TransitionElement& b : g.elements) {
          const TransitionElement ab = composeTransitions(a, b);
          std::cout << "(" << ab.l1 << "," << ab.l2 << ") ";
        }
        std::cout << "\n";
      }
    }
  });
}

void addRefine(CLI::App& app) {
  struct Opts {
    long long M = 0;
    std::string radius, out;
    bool latticeOnly = false, json = false;
  };
  auto opts = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("refine", "Refine the lattice by the basic-tile scheme");
  sub->add_option("--M", opts->M, "Refinement order (>= 1)")->required();
  sub->add_option("--radius", opts->radius, "Disk radius")->required();
  sub->add_flag("--lattice-only", opts->latticeOnly, "Emit the refined point set, not the honeycomb");
  sub->add_option("--out", opts->out, "Write the JSON to a file");
  sub->add_flag("--json", opts->json, "Print the JSON to stdout");
  sub->callback([opts] {
    const Rat radius = parseRadius(opts->radius);
    std::string jsonText;
    std::string summary;
    if (opts->latticeOnly) {
      const RefinedLattice lattice = refineLattice(opts->M, radius);
      jsonText = dumpJson(refinedLatticeToJson(lattice));
      summary = "refined lattice (1/" + std::to_string(lattice.M) + ") P: " +
                std::to_string(lattice.points.size()) + " points in radius " + ratToString(radius) +
                "\n";
    } else {
      const GraphenePatch patch = refinedGraphene(opts->M, radius);
      jsonText = dumpJson(patchToJson(patch));
      summary = patchSummary(patch);
    }
    if (!opts->out.empty()) writeTextFile(opts->out, jsonText);
    if (opts->json) {
      std::cout << jsonText;
    } else {
      std::cout << summary;
    }
  });
}

void addProximityReport(CLI::App& app) {
  struct Opts {
    std::string radius = "8", svg;
    bool json = false;
  };
  auto opts = std::make_shared<Opts>();
  CLI::App* sub =
      app.add_subcommand("proximity-report", "Voronoi cells of the honeycomb vertices, with sizes");
  sub->add_option("--radius", opts->radius, "Disk radius (>= 6)");
  sub->add_option("--svg", opts->svg, "Also render the cells to an SVG file");
  sub->add_flag("--json", opts->json, "Machine output");
  sub->callback([opts] {
    const GraphenePatch patch = buildByCongruence(parseRadius(opts->radius), 0);
    const ProximityReport report = proximityRefinementReport(patch);
    if (!opts->svg.empty()) {
      writeTextFile(opts->svg, renderSVG(proximityCells(patch), RenderSpec{}));
    }
    if (opts->json) {
      std::cout << dumpJson(proximityReportToJson(report));
      return;
    }
    std::cout << "proximity cells of " << report.interiorCellCount << " interior vertices\n"
              << "  triangles: " << (report.allCellsTriangles ? "yes" : "no")
              << ", equilateral: " << (report.allCellsEquilateral ? "yes" : "no")
              << ", corners in Q: " << (report.allCornersInQ ? "yes" : "no") << "\n"
              << "  corner set = Q on trimmed disk: " << (report.cornerSetEqualsQ ? "yes" : "no")
              << "; corners + sites = P: " << (report.cornersPlusSitesEqualP ? "yes" : "no") << "\n"
              << "  triangle edge^2 = " << ratToString(report.triangleEdgeSq)
              << ", basic-tile edge^2 = " << ratToString(report.weightTriangleEdgeSq)
              << ", ratio = " << ratToString(report.edgeRatioSq) << "\n";
    if (!report.refinesBasicTile) {
      std::cout << "  note: the proximity triangles are LARGER than the basic-tile triangle, "
                   "contradicting the claim that they refine it; values reported unchanged\n";
    }
  });
}

void addVerify(CLI::App& app, int& exitCode) {
  struct Opts {
    std::string radius = "10";
    bool json = false;
  };
  auto opts = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("verify", "Replay the cross-construction identities");
  sub->add_option("--radius", opts->radius, "Disk radius for the six-way equality (>= 4)");
  sub->add_flag("--json", opts->json, "Machine output");
  sub->callback([opts, &exitCode] {
    const VerifyReport report = verifyAll(parseRadius(opts->radius));
    if (opts->json) {
      std::cout << dumpJson(verifyReportToJson(report));
    } else {
      for (const CheckResult& c : report.checks) {
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << " — " << c.detail << "\n";
      }
      std::cout << (report.allPass() ? "all checks passed" : "verification FAILED") << "\n";
    }
    if (!report.allPass()) exitCode = 1;
  });
}

void addRender(CLI::App& app) {
  struct Opts {
    std::string in, out;
    bool showClasses = false, json = false;
  };
  auto opts = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("render", "Render a patch JSON to SVG");
  sub->add_option("--in", opts->in, "Patch or coloured-patch JSON file")->required();
  sub->add_option("--out", opts->out, "Output SVG file")->required();
  sub->add_flag("--show-classes", opts->showClasses, "Mark vertices by congruence class");
  sub->add_flag("--json", opts->json, "Machine output");
  sub->callback([opts] {
    const Json j = readJsonFile(opts->in);
    RenderSpec spec;
    spec.showClasses = opts->showClasses;
    const std::string svg = j.contains("m") ? renderSVG(colouredPatchFromJson(j), spec)
                                            : renderSVG(patchFromJson(j), spec);
    writeTextFile(opts->out, svg);
    if (opts->json) {
      Json status;
      status["in"] = opts->in;
      status["out"] = opts->out;
      status["bytes"] = svg.size();
      std::cout << dumpJson(status);
    } else {
      std::cout << "wrote " << opts->out << " (" << svg.size() << " bytes)\n";
    }
  });
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphene: exact honeycomb constructions from rank-2/3 weight systems"};
  app.require_subcommand(1);
  int exitCode = 0;

  addTables(app);
  addOrbit(app);
  addProject(app);
  addBuild(app);
  addColour(app);
  addTransition(app);
  addGroup(app);
  addRefine(app);
  addProximityReport(app);
  addVerify(app, exitCode);
  addRender(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exitCode;
}
