#include "tropcount/deformation.hpp"

namespace tropcount {

DeformationComplex build_deformation_complex(const TropicalCurve& curve,
                                             const ProblemSpec& spec) {
  const MarkedTree& tree = curve.tree();
  const RootedStructure& rooted = curve.rooted;
  DeformationComplex out;
  out.rank = spec.rank;
  out.vertices = tree.finite_count;
  out.edges = tree.bounded_count();

  std::size_t cols = static_cast<std::size_t>(out.vertices) * out.rank + out.edges;
  std::size_t rows = static_cast<std::size_t>(out.edges) * out.rank;
  out.constraint_row_start.assign(spec.ends(), static_cast<std::size_t>(-1));
  for (int i = 0; i < spec.ends(); ++i) {
    const AffineConstraint& c = spec.constraints[i];
    if (c.quotient_rank == 0) continue;
    out.constraint_row_start[i] = rows;
    rows += c.quotient_rank;
  }
  out.cross_ratio_row_start = rows;
  rows += spec.cross_ratios.size();

  out.matrix = IntMatrix(rows, cols);
  out.target.assign(rows, Rat(0));

  // edge rows: position(tail) - position(head) + length * slope = 0
  for (int eid = 0; eid < out.edges; ++eid) {
    for (int c = 0; c < out.rank; ++c) {
      std::size_t row = out.edge_row(eid, c);
      out.matrix.at(row, out.vertex_col(rooted.tail[eid], c)) += 1;
      out.matrix.at(row, out.vertex_col(rooted.head[eid], c)) -= 1;
      out.matrix.at(row, out.length_col(eid)) = curve.slopes[eid][c];
    }
  }

  // constraint rows: projection applied to the marked vertex position
  for (int i = 0; i < spec.ends(); ++i) {
    const AffineConstraint& c = spec.constraints[i];
    if (c.quotient_rank == 0) continue;
    int v = tree.end_vertex[i];
    std::size_t start = out.constraint_row_start[i];
    for (std::size_t l = 0; l < c.quotient_rank; ++l) {
      for (int j = 0; j < out.rank; ++j)
        out.matrix.at(start + l, out.vertex_col(v, j)) = c.projection.at(l, j);
      out.target[start + l] = c.target[l];
    }
  }

  // cross-ratio rows: separation signs on the length variables
  for (std::size_t x = 0; x < spec.cross_ratios.size(); ++x) {
    std::size_t row = out.cross_ratio_row_start + x;
    for (int eid = 0; eid < out.edges; ++eid) {
      int sign = separates(rooted, eid, spec.cross_ratios[x].ends);
      if (sign != 0) out.matrix.at(row, out.length_col(eid)) = sign;
    }
    out.target[row] = spec.cross_ratios[x].tropical;
  }
  return out;
}

MultiplicityReport multiplicity_report(const DeformationComplex& complex) {
  MultiplicityReport report;
  const IntMatrix& m = complex.matrix;
  if (m.rows() == 0 || m.cols() == 0) {
    report.e1_rank = static_cast<int>(m.cols());
    report.regular_over_Q = (m.rows() == 0);
    if (report.regular_over_Q && m.cols() == 0) report.m_complex = Int(1);
    return report;
  }
  SmithDecomposition snf = smith_normal_form(m);
  std::size_t rank = snf.rank();
  report.e1_rank = static_cast<int>(m.cols() - rank);
  report.regular_over_Q = (rank == m.rows());
  for (const Int& d : snf.divisors)
    if (d != 0) report.divisors.push_back(d);
  for (const Int& d : report.divisors)
    if (mpz_even_p(d.get_mpz_t())) ++report.epsilon_even;
  if (report.regular_over_Q && report.e1_rank == 0) {
    Int product(1);
    for (const Int& d : report.divisors) product *= d;
    report.m_complex = product;
  }
  return report;
}

MultiplicityReport multiplicity_report(const TropicalCurve& curve,
                                       const ProblemSpec& spec) {
  return multiplicity_report(build_deformation_complex(curve, spec));
}

Int real_multiplicity(const DeformationComplex& complex,
                      const std::vector<int>& sign) {
  const IntMatrix& m = complex.matrix;
  std::size_t edge_rows = static_cast<std::size_t>(complex.edges) * complex.rank;
  if (sign.size() != m.rows() - edge_rows)
    throw TropError(ErrorCode::Invariant, "sign vector length mismatch");
  for (int s : sign)
    if (s != 1 && s != -1)
      throw TropError(ErrorCode::Invariant, "sign entries must be +-1");

  SmithDecomposition snf = smith_normal_form(m);
  if (snf.rank() != m.rows() || m.rows() != m.cols())
    throw TropError(ErrorCode::Invariant,
                    "real multiplicity needs a finite complex multiplicity");

  // full sign over all rows: +1 on the edge block
  std::vector<int> full(m.rows(), 1);
  for (std::size_t k = 0; k < sign.size(); ++k) full[edge_rows + k] = sign[k];

  // multiplicative transform by U; only entry parities matter
  int epsilon = 0;
  for (std::size_t j = 0; j < m.rows(); ++j) {
    if (!mpz_even_p(snf.divisors[j].get_mpz_t())) continue;
    ++epsilon;
    int transformed = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (full[i] == -1 && mpz_odd_p(snf.U.at(j, i).get_mpz_t()))
        transformed = -transformed;
    if (transformed != 1) return Int(0);
  }
  Int result(1);
  mpz_mul_2exp(result.get_mpz_t(), result.get_mpz_t(), epsilon);
  return result;
}

Int real_multiplicity(const TropicalCurve& curve, const ProblemSpec& spec,
                      const std::vector<int>& sign) {
  return real_multiplicity(build_deformation_complex(curve, spec), sign);
}

}  // namespace tropcount
