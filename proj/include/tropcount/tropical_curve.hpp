#pragma once

#include "tropcount/marked_tree.hpp"
#include "tropcount/problem.hpp"

namespace tropcount {

// A parameterized rational tropical curve: the tree with integer slopes on
// all edges, positive rational lengths on bounded edges, and vertex
// positions in Q^n. Slopes of bounded edges are oriented tail->head in the
// rooted orientation; end slopes are the degree vectors.
struct TropicalCurve {
  RootedStructure rooted;         // owns the tree
  std::vector<IntVec> slopes;     // per bounded edge
  std::vector<Rat> lengths;       // per bounded edge, > 0
  std::vector<RatVec> positions;  // per finite vertex

  const MarkedTree& tree() const { return rooted.tree; }
  int rank() const { return positions.empty() ? 0 : static_cast<int>(positions[0].size()); }
  const IntVec& edge_slope(int eid, const ProblemSpec& spec) const;
};

// Unique slope assignment on bounded edges from the balancing condition:
// the slope of an edge is the sum of the degrees above its head.
std::vector<IntVec> propagate_slopes(const RootedStructure& rooted,
                                     const std::vector<IntVec>& degrees);

// Builds a curve from lengths plus the anchor position of the root-adjacent
// vertex; positions of the other vertices follow the edge slopes.
TropicalCurve make_curve(const MarkedTree& tree, const std::vector<IntVec>& degrees,
                         const std::vector<Rat>& lengths, const RatVec& root_position);

// Same, but all positions are supplied; recomputes them from the anchor and
// rejects inconsistent input.
TropicalCurve make_curve_checked(const MarkedTree& tree,
                                 const std::vector<IntVec>& degrees,
                                 const std::vector<Rat>& lengths,
                                 const std::vector<RatVec>& positions);

// Asserts edge compatibility and balancing; throws on violation.
void validate_curve(const TropicalCurve& curve, const std::vector<IntVec>& degrees);

// Sum over bounded edges of separation sign times length.
Rat cross_ratio_formula(const TropicalCurve& curve, const std::array<int, 4>& quad);

// Signed overlap length of the oriented geodesics i1->i2 and i3->i4;
// independent of the formula route.
Rat cross_ratio_geodesic(const TropicalCurve& curve, const std::array<int, 4>& quad);

// Whether the i-th marked vertex satisfies its affine constraint
// (projection * position == target). 1-based end index.
bool check_affine_constraint(const TropicalCurve& curve, const ProblemSpec& spec, int i);

}  // namespace tropcount
