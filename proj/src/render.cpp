#include "graphene/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace graphene {

EuclideanEmbedding a2Embedding() {
  // Closed-form principal square root of the SPD matrix G = [[2/3,1/3],[1/3,2/3]]:
  // sqrt(G) = (G + sqrt(det G) I) / sqrt(tr G + 2 sqrt(det G)).
  const double g11 = 2.0 / 3.0, g12 = 1.0 / 3.0, g22 = 2.0 / 3.0;
  const double sdet = std::sqrt(g11 * g22 - g12 * g12);
  const double denom = std::sqrt(g11 + g22 + 2.0 * sdet);
  return EuclideanEmbedding{(g11 + sdet) / denom, g12 / denom, g12 / denom, (g22 + sdet) / denom};
}

std::array<double, 2> embedPoint(LatticePoint p, long long scaleDen) {
  const EuclideanEmbedding e = a2Embedding();
  const double x = static_cast<double>(p.x) / static_cast<double>(scaleDen);
  const double y = static_cast<double>(p.y) / static_cast<double>(scaleDen);
  return {e.e11 * x + e.e12 * y, e.e21 * x + e.e22 * y};
}

std::array<double, 2> embedPoint(const RatPoint& p) {
  const EuclideanEmbedding e = a2Embedding();
  const double x = toDouble(p.x);
  const double y = toDouble(p.y);
  return {e.e11 * x + e.e12 * y, e.e21 * x + e.e22 * y};
}

std::vector<std::string> defaultPalette() {
  return {"#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3", "#937860",
          "#da8bc3", "#8c8c8c", "#ccb974", "#64b5cd", "#4878cf", "#e377c2"};
}

namespace {

// Fixed-point decimal with no negative zero, so output bytes are reproducible.
std::string fmt6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

struct Canvas {
  std::string body;
  double extent = 1.0;

  void circle(double cx, double cy, double r, const std::string& fill) {
    body += "  <circle cx=\"" + fmt6(cx) + "\" cy=\"" + fmt6(-cy) + "\" r=\"" + fmt6(r) +
            "\" fill=\"" + fill + "\"/>\n";
  }
  void square(double cx, double cy, double half, const std::string& fill) {
    body += "  <rect x=\"" + fmt6(cx - half) + "\" y=\"" + fmt6(-cy - half) + "\" width=\"" +
            fmt6(2 * half) + "\" height=\"" + fmt6(2 * half) + "\" fill=\"" + fill + "\"/>\n";
  }
  void polygonStart(const std::string& fill, const std::string& stroke, double strokeWidth) {
    body += "  <polygon fill=\"" + fill + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
            fmt6(strokeWidth) + "\" points=\"";
  }
  void polygonPoint(double x, double y, bool first) {
    if (!first) body += ' ';
    body += fmt6(x) + "," + fmt6(-y);
  }
  void polygonEnd() { body += "\"/>\n"; }

  std::string finish() const {
    const std::string e = fmt6(extent);
    const std::string size = fmt6(2 * extent);
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-" + e + " -" + e + " " + size +
           " " + size + "\">\n" + body + "</svg>\n";
  }
};

void drawEdges(Canvas& canvas, const GraphenePatch& patch, double strokeWidth) {
  canvas.body += "  <g stroke=\"#333333\" stroke-width=\"" + fmt6(strokeWidth) +
                 "\" stroke-linecap=\"round\">\n";
  std::string inner;
  for (const LatticePoint& v : patch.vertices) {
    for (const LatticePoint& o : kHexCorner) {
      const LatticePoint u = v + o;
      // Each honeycomb edge has squared stored-coordinate length 2; emit it
      // from its lexicographically smaller endpoint only.
      if (!(v < u)) continue;
      if (!std::binary_search(patch.vertices.begin(), patch.vertices.end(), u)) continue;
      const auto a = embedPoint(v, patch.scaleDen);
      const auto b = embedPoint(u, patch.scaleDen);
      inner += "    <line x1=\"" + fmt6(a[0]) + "\" y1=\"" + fmt6(-a[1]) + "\" x2=\"" +
               fmt6(b[0]) + "\" y2=\"" + fmt6(-b[1]) + "\"/>\n";
    }
  }
  canvas.body += inner + "  </g>\n";
}

void drawVertices(Canvas& canvas, const GraphenePatch& patch, const RenderSpec& spec) {
  for (size_t i = 0; i < patch.vertices.size(); ++i) {
    const auto p = embedPoint(patch.vertices[i], patch.scaleDen);
    if (!spec.showClasses) {
      canvas.circle(p[0], p[1], spec.vertexRadius, "#1a1a1a");
      continue;
    }
    switch (patch.vertexClasses[i]) {
      case 1: canvas.circle(p[0], p[1], spec.vertexRadius, "#c44e52"); break;
      case 2: canvas.circle(p[0], p[1], spec.vertexRadius * 0.6, "#4c72b0"); break;
      default: canvas.square(p[0], p[1], spec.vertexRadius * 0.8, "#55a868"); break;
    }
  }
}

double patchExtent(const GraphenePatch& patch) {
  // The disk radius plus one cell diameter covers every rim hexagon corner.
  return toDouble(patch.radius) + 1.5;
}

} // namespace

std::string renderSVG(const GraphenePatch& patch, const RenderSpec& spec) {
  Canvas canvas;
  canvas.extent = patchExtent(patch);
  drawEdges(canvas, patch, spec.strokeWidth);
  drawVertices(canvas, patch, spec);
  return canvas.finish();
}

std::string renderSVG(const ColouredPatch& coloured, const RenderSpec& spec) {
  if (static_cast<long long>(spec.palette.size()) < coloured.scheme.m) {
    throw std::invalid_argument("renderSVG: palette has " + std::to_string(spec.palette.size()) +
                                " colours but the scheme needs " + std::to_string(coloured.scheme.m));
  }
  Canvas canvas;
  canvas.extent = patchExtent(coloured.patch);
  for (size_t i = 0; i < coloured.patch.hexagons.size(); ++i) {
    const HexCell& hex = coloured.patch.hexagons[i];
    canvas.polygonStart(spec.palette[static_cast<size_t>(coloured.colours[i])], "none", 0.0);
    for (size_t k = 0; k < hex.vertices.size(); ++k) {
      const auto p = embedPoint(hex.vertices[k], coloured.patch.scaleDen);
      canvas.polygonPoint(p[0], p[1], k == 0);
    }
    canvas.polygonEnd();
  }
  drawEdges(canvas, coloured.patch, spec.strokeWidth);
  drawVertices(canvas, coloured.patch, spec);
  return canvas.finish();
}

std::string renderSVG(const std::vector<VoronoiCell>& cells, const RenderSpec& spec) {
  Canvas canvas;
  double extent = 1.0;
  for (const VoronoiCell& cell : cells) {
    for (const RatPoint& c : cell.corners) {
      const auto p = embedPoint(c);
      extent = std::max({extent, std::abs(p[0]) + 0.5, std::abs(p[1]) + 0.5});
    }
  }
  canvas.extent = extent;
  for (const VoronoiCell& cell : cells) {
    canvas.polygonStart("#eef2f7", "#333333", spec.strokeWidth);
    for (size_t k = 0; k < cell.corners.size(); ++k) {
      const auto p = embedPoint(cell.corners[k]);
      canvas.polygonPoint(p[0], p[1], k == 0);
    }
    canvas.polygonEnd();
  }
  for (const VoronoiCell& cell : cells) {
    const auto p = embedPoint(cell.site);
    canvas.circle(p[0], p[1], spec.vertexRadius, "#1a1a1a");
  }
  return canvas.finish();
}

} // namespace graphene
