// Euclidean embedding of omega-coordinates (symmetric square root of the A2
// Gram matrix) and deterministic SVG rendering.  This is the only layer that
// leaves exact arithmetic; coordinates are printed with six decimals.
#pragma once

#include "graphene/builder.hpp"
#include "graphene/colouring.hpp"

#include <array>
#include <string>
#include <vector>

namespace graphene {

struct EuclideanEmbedding {
  // Symmetric 2x2 matrix E with E*E = Gram(A2); columns are the images of the
  // fundamental weights.
  double e11, e12, e21, e22;
};

EuclideanEmbedding a2Embedding();

std::array<double, 2> embedPoint(LatticePoint p, long long scaleDen = 1);
std::array<double, 2> embedPoint(const RatPoint& p);

std::vector<std::string> defaultPalette();  // 12 distinguishable fills

struct RenderSpec {
  double strokeWidth = 0.04;
  double vertexRadius = 0.09;
  bool showClasses = false;  // class-1 circles, class-2 dots, class-0 squares
  std::vector<std::string> palette = defaultPalette();
};

// All renderers are byte-deterministic: fixed element order (sorted input
// structures), fixed 6-decimal coordinates, y-axis flipped for display.
std::string renderSVG(const GraphenePatch& patch, const RenderSpec& spec);
// Throws if spec.palette has fewer than m entries.
std::string renderSVG(const ColouredPatch& coloured, const RenderSpec& spec);
std::string renderSVG(const std::vector<VoronoiCell>& cells, const RenderSpec& spec);

} // namespace graphene
