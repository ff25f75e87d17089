#pragma once

#include "tropcount/solve.hpp"
#include "tropcount/tropical_curve.hpp"

namespace tropcount {

struct RenderOptions {
  Rat xmin{-1}, ymin{-1}, xmax{1}, ymax{1};
  // 2 x rank matrix projecting higher-rank curves to the drawing plane;
  // required when the curve rank exceeds 2
  std::optional<RatMatrix> projection;
  int width = 640;
  int height = 640;
};

// SVG 1.1 drawing: finite vertices as dots (contracted marked ends
// highlighted), bounded edges as segments, ends as rays clipped to the box.
std::string render_curve_svg(const TropicalCurve& curve, const ProblemSpec& spec,
                             const RenderOptions& options);

}  // namespace tropcount
