#pragma once

#include "tropcount/tropical_curve.hpp"

namespace tropcount {

// The integer matrix controlling deformations of a constrained curve.
// Columns: one block of `rank` position variables per finite vertex, then
// one length variable per bounded edge. Rows: one block of `rank` edge
// equations per bounded edge, then the quotient-projection rows of each
// nontrivial toric constraint, then one row per cross-ratio.
struct DeformationComplex {
  IntMatrix matrix;
  RatVec target;  // (0, constraint targets, cross-ratio values)
  int rank = 0;
  int vertices = 0;
  int edges = 0;
  std::vector<std::size_t> constraint_row_start;  // per end, npos if rank 0
  std::size_t cross_ratio_row_start = 0;

  std::size_t vertex_col(int v, int coord) const { return v * rank + coord; }
  std::size_t length_col(int eid) const { return vertices * rank + eid; }
  std::size_t edge_row(int eid, int coord) const { return eid * rank + coord; }
};

DeformationComplex build_deformation_complex(const TropicalCurve& curve,
                                             const ProblemSpec& spec);

// Kernel/cokernel bookkeeping of the complex over Z and Q.
struct MultiplicityReport {
  int e1_rank = 0;              // dim of the rational kernel
  std::vector<Int> divisors;    // elementary divisors (nonzero ones)
  std::optional<Int> m_complex; // product of divisors, or infinite
  bool regular_over_Q = false;  // rational cokernel vanishes
  int epsilon_even = 0;         // number of even divisors

  bool finite() const { return m_complex.has_value(); }
};

MultiplicityReport multiplicity_report(const DeformationComplex& complex);
MultiplicityReport multiplicity_report(const TropicalCurve& curve,
                                       const ProblemSpec& spec);

// Real multiplicity with respect to a sign vector over the constraint and
// cross-ratio rows (+1 is implied on the edge rows). Returns 0 or 2^epsilon.
Int real_multiplicity(const DeformationComplex& complex,
                      const std::vector<int>& sign);
Int real_multiplicity(const TropicalCurve& curve, const ProblemSpec& spec,
                      const std::vector<int>& sign);

}  // namespace tropcount
