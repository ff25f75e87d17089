#include "tropcount/render.hpp"

#include <sstream>

namespace tropcount {

namespace {

struct Mapper {
  const RenderOptions& opt;
  double sx(const Rat& x) const {
    return Rat(x - opt.xmin).get_d() / Rat(opt.xmax - opt.xmin).get_d() * opt.width;
  }
  double sy(const Rat& y) const {
    return Rat(opt.ymax - y).get_d() / Rat(opt.ymax - opt.ymin).get_d() * opt.height;
  }
};

RatVec project(const RatVec& p, const std::optional<RatMatrix>& projection) {
  if (!projection) return p;
  return projection->apply(p);
}

RatVec project_dir(const IntVec& d, const std::optional<RatMatrix>& projection) {
  RatVec v(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) v[i] = Rat(d[i]);
  return project(v, projection);
}

}  // namespace

std::string render_curve_svg(const TropicalCurve& curve, const ProblemSpec& spec,
                             const RenderOptions& options) {
  if (options.xmax <= options.xmin || options.ymax <= options.ymin)
    throw TropError(ErrorCode::Invariant, "empty bounding box");
  if (curve.rank() != 2 && !options.projection)
    throw TropError(ErrorCode::Invariant,
                    "rank " + std::to_string(curve.rank()) +
                        " curves need an explicit 2-plane projection");
  if (options.projection &&
      (options.projection->rows() != 2 ||
       options.projection->cols() != static_cast<std::size_t>(curve.rank())))
    throw TropError(ErrorCode::Invariant, "projection must be 2 x rank");

  const MarkedTree& tree = curve.tree();
  const RootedStructure& rooted = curve.rooted;
  Mapper map{options};
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << options.width << "\" height=\"" << options.height << "\" viewBox=\"0 0 "
      << options.width << " " << options.height << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  std::vector<RatVec> pos(tree.finite_count);
  for (int v = 0; v < tree.finite_count; ++v)
    pos[v] = project(curve.positions[v], options.projection);

  for (int eid = 0; eid < tree.bounded_count(); ++eid) {
    const RatVec& a = pos[rooted.tail[eid]];
    const RatVec& b = pos[rooted.head[eid]];
    svg << "  <line class=\"edge\" x1=\"" << map.sx(a[0]) << "\" y1=\""
        << map.sy(a[1]) << "\" x2=\"" << map.sx(b[0]) << "\" y2=\"" << map.sy(b[1])
        << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }

  // rays for non-contracted ends, extended far enough to leave the box
  Rat span = (options.xmax - options.xmin) + (options.ymax - options.ymin);
  for (int i = 1; i <= tree.ends; ++i) {
    RatVec dir = project_dir(spec.degrees[i - 1], options.projection);
    if (dir[0] == 0 && dir[1] == 0) continue;
    const RatVec& a = pos[tree.end_vertex[i - 1]];
    Rat scale = span / std::max(abs(dir[0]), abs(dir[1]));
    RatVec b{a[0] + scale * dir[0], a[1] + scale * dir[1]};
    svg << "  <line class=\"ray\" data-end=\"" << i << "\" x1=\"" << map.sx(a[0])
        << "\" y1=\"" << map.sy(a[1]) << "\" x2=\"" << map.sx(b[0]) << "\" y2=\""
        << map.sy(b[1]) << "\" stroke=\"steelblue\" stroke-width=\"2\"/>\n";
  }

  for (int v = 0; v < tree.finite_count; ++v) {
    bool marked = false;
    for (int i = 1; i <= tree.ends; ++i)
      if (tree.end_vertex[i - 1] == v && is_zero(spec.degrees[i - 1])) marked = true;
    svg << "  <circle class=\"" << (marked ? "marked-vertex" : "vertex")
        << "\" cx=\"" << map.sx(pos[v][0]) << "\" cy=\"" << map.sy(pos[v][1])
        << "\" r=\"4\" fill=\"" << (marked ? "crimson" : "black") << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace tropcount
