#include "tropcount/tropical_curve.hpp"

#include <map>

namespace tropcount {

const IntVec& TropicalCurve::edge_slope(int eid, const ProblemSpec& spec) const {
  if (tree().is_end_edge(eid)) return spec.degrees[tree().end_index(eid) - 1];
  return slopes[eid];
}

std::vector<IntVec> propagate_slopes(const RootedStructure& rooted,
                                     const std::vector<IntVec>& degrees) {
  const MarkedTree& tree = rooted.tree;
  if (static_cast<int>(degrees.size()) != tree.ends)
    throw TropError(ErrorCode::Invariant, "one degree vector per end required");
  std::size_t n = degrees.empty() ? 0 : degrees[0].size();
  std::vector<IntVec> slopes(tree.bounded_count(), IntVec(n, Int(0)));
  for (int eid = 0; eid < tree.bounded_count(); ++eid) {
    std::uint32_t above = rooted.ends_above_edge[eid];
    for (int i = 1; i <= tree.ends; ++i)
      if ((above >> (i - 1)) & 1u) slopes[eid] = add(slopes[eid], degrees[i - 1]);
  }
  return slopes;
}

TropicalCurve make_curve(const MarkedTree& tree, const std::vector<IntVec>& degrees,
                         const std::vector<Rat>& lengths, const RatVec& root_position) {
  TropicalCurve curve;
  curve.rooted = rooted_structure(tree);
  curve.slopes = propagate_slopes(curve.rooted, degrees);
  if (static_cast<int>(lengths.size()) != tree.bounded_count())
    throw TropError(ErrorCode::Invariant, "one length per bounded edge required");
  for (const Rat& l : lengths)
    if (l <= 0)
      throw TropError(ErrorCode::Invariant, "edge lengths must be positive");
  curve.lengths = lengths;

  std::size_t n = root_position.size();
  curve.positions.assign(tree.finite_count, RatVec(n, Rat(0)));
  std::vector<bool> placed(tree.finite_count, false);
  curve.positions[curve.rooted.root_vertex] = root_position;
  placed[curve.rooted.root_vertex] = true;
  // positions follow h(head) = h(tail) + length * slope, walking by depth
  std::vector<int> verts(tree.finite_count);
  for (int v = 0; v < tree.finite_count; ++v) verts[v] = v;
  std::sort(verts.begin(), verts.end(), [&](int a, int b) {
    return curve.rooted.depth[a] < curve.rooted.depth[b];
  });
  for (int v : verts) {
    if (placed[v]) continue;
    int pe = curve.rooted.parent_edge[v];
    int pv = curve.rooted.parent_vertex[v];
    for (std::size_t c = 0; c < n; ++c)
      curve.positions[v][c] =
          curve.positions[pv][c] + curve.lengths[pe] * Rat(curve.slopes[pe][c]);
    placed[v] = true;
  }
  validate_curve(curve, degrees);
  return curve;
}

TropicalCurve make_curve_checked(const MarkedTree& tree,
                                 const std::vector<IntVec>& degrees,
                                 const std::vector<Rat>& lengths,
                                 const std::vector<RatVec>& positions) {
  if (positions.size() != static_cast<std::size_t>(tree.finite_count))
    throw TropError(ErrorCode::Invariant, "one position per finite vertex required");
  RootedStructure rooted = rooted_structure(tree);
  TropicalCurve curve = make_curve(tree, degrees, lengths, positions[rooted.root_vertex]);
  if (curve.positions != positions)
    throw TropError(ErrorCode::Invariant,
                    "vertex positions inconsistent with lengths and slopes");
  return curve;
}

void validate_curve(const TropicalCurve& curve, const std::vector<IntVec>& degrees) {
  const MarkedTree& tree = curve.tree();
  const RootedStructure& rooted = curve.rooted;
  std::size_t n = degrees.empty() ? 0 : degrees[0].size();
  IntVec total(n, Int(0));
  for (const IntVec& d : degrees) total = add(total, d);
  if (!is_zero(total))
    throw TropError(ErrorCode::Invariant, "degrees do not balance");

  for (int eid = 0; eid < tree.bounded_count(); ++eid) {
    if (curve.lengths[eid] <= 0)
      throw TropError(ErrorCode::Invariant, "edge lengths must be positive");
    for (std::size_t c = 0; c < n; ++c) {
      Rat expect = curve.positions[rooted.tail[eid]][c] +
                   curve.lengths[eid] * Rat(curve.slopes[eid][c]);
      if (curve.positions[rooted.head[eid]][c] != expect)
        throw TropError(ErrorCode::Invariant, "edge compatibility violated");
    }
  }

  // balancing: outgoing slopes at each finite vertex sum to zero
  for (int v = 0; v < tree.finite_count; ++v) {
    IntVec sum(n, Int(0));
    for (int eid = 0; eid < tree.bounded_count(); ++eid) {
      if (rooted.tail[eid] == v) sum = add(sum, curve.slopes[eid]);
      if (rooted.head[eid] == v) sum = add(sum, negate(curve.slopes[eid]));
    }
    for (int i = 1; i <= tree.ends; ++i)
      if (tree.end_vertex[i - 1] == v) sum = add(sum, degrees[i - 1]);
    if (!is_zero(sum))
      throw TropError(ErrorCode::Invariant, "balancing violated at a vertex");
  }
}

Rat cross_ratio_formula(const TropicalCurve& curve, const std::array<int, 4>& quad) {
  Rat value(0);
  for (int eid = 0; eid < curve.tree().bounded_count(); ++eid) {
    int sign = separates(curve.rooted, eid, quad);
    if (sign != 0) value += Rat(sign) * curve.lengths[eid];
  }
  return value;
}

Rat cross_ratio_geodesic(const TropicalCurve& curve, const std::array<int, 4>& quad) {
  for (int k = 0; k < 4; ++k)
    for (int l = k + 1; l < 4; ++l)
      if (quad[k] == quad[l])
        throw TropError(ErrorCode::Invariant, "cross-ratio ends not distinct");
  auto first = geodesic(curve.rooted, VertexRef::at_infinity(quad[0]),
                        VertexRef::at_infinity(quad[1]));
  auto second = geodesic(curve.rooted, VertexRef::at_infinity(quad[2]),
                         VertexRef::at_infinity(quad[3]));
  std::map<int, int> direction_on_first;
  for (const PathStep& s : first)
    if (!curve.tree().is_end_edge(s.edge)) direction_on_first[s.edge] = s.direction;
  Rat value(0);
  for (const PathStep& s : second) {
    auto it = direction_on_first.find(s.edge);
    if (it == direction_on_first.end()) continue;
    value += Rat(it->second == s.direction ? 1 : -1) * curve.lengths[s.edge];
  }
  return value;
}

bool check_affine_constraint(const TropicalCurve& curve, const ProblemSpec& spec, int i) {
  const AffineConstraint& c = spec.constraints.at(i - 1);
  if (c.quotient_rank == 0) return true;
  const RatVec& pos = curve.positions[curve.tree().end_vertex[i - 1]];
  for (std::size_t l = 0; l < c.quotient_rank; ++l) {
    Rat lhs(0);
    for (std::size_t j = 0; j < pos.size(); ++j)
      lhs += Rat(c.projection.at(l, j)) * pos[j];
    if (lhs != c.target[l]) return false;
  }
  return true;
}

}  // namespace tropcount
