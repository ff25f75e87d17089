#include "tropcount/problem.hpp"

#include <set>

namespace tropcount {

std::size_t ProblemSpec::constraint_rank_sum() const {
  std::size_t total = 0;
  for (const auto& c : constraints) total += c.quotient_rank;
  return total;
}

void ProblemSpec::validate() {
  if (rank < 1) throw TropError(ErrorCode::Invariant, "lattice rank must be positive");
  const int r = ends();
  if (r < 3) throw TropError(ErrorCode::Invariant, "need at least 3 ends");
  if (r > 32) throw TropError(ErrorCode::Invariant, "more than 32 ends not supported");
  if (static_cast<int>(constraints.size()) != r)
    throw TropError(ErrorCode::Invariant, "one constraint per end required");

  IntVec total(rank, Int(0));
  for (const IntVec& d : degrees) {
    if (static_cast<int>(d.size()) != rank)
      throw TropError(ErrorCode::Invariant, "degree vector of wrong rank");
    total = add(total, d);
  }
  if (!is_zero(total))
    throw TropError(ErrorCode::Invariant, "degrees do not balance");

  for (int i = 0; i < r; ++i) {
    AffineConstraint& c = constraints[i];
    if (c.lattice.rows() > 0 && c.lattice.cols() != static_cast<std::size_t>(rank))
      throw TropError(ErrorCode::Invariant, "constraint lattice of wrong rank");
    FreeQuotient fq = is_free_quotient(c.lattice, rank);
    if (!fq.is_free)
      throw TropError(ErrorCode::Invariant,
                      "quotient by constraint lattice " + std::to_string(i + 1) +
                          " has torsion");
    c.projection = fq.projection;
    c.quotient_rank = rank - fq.lattice_rank;
    // the degree vector must lie in the constraint lattice
    IntVec image = c.projection.apply(degrees[i]);
    if (!is_zero(image))
      throw TropError(ErrorCode::Invariant,
                      "degree " + std::to_string(i + 1) +
                          " does not lie in its constraint lattice");
    if (c.quotient_rank > 0) {
      if (c.point.size() != static_cast<std::size_t>(rank))
        throw TropError(ErrorCode::Invariant,
                        "constraint " + std::to_string(i + 1) +
                            " needs a representative point in Q^n");
      c.target.assign(c.quotient_rank, Rat(0));
      for (std::size_t l = 0; l < c.quotient_rank; ++l)
        for (int j = 0; j < rank; ++j)
          c.target[l] += Rat(c.projection.at(l, j)) * c.point[j];
    } else {
      c.target.clear();
    }
    if (c.leading_coefficients) {
      if (c.leading_coefficients->size() != static_cast<std::size_t>(rank))
        throw TropError(ErrorCode::Invariant,
                        "leading coefficients of wrong length");
      for (const Rat& x : *c.leading_coefficients)
        if (x == 0)
          throw TropError(ErrorCode::Invariant, "zero leading coefficient");
    }
  }

  for (const CrossRatioConstraint& x : cross_ratios) {
    std::set<int> seen;
    for (int e : x.ends) {
      if (e < 1 || e > r)
        throw TropError(ErrorCode::Invariant, "cross-ratio end index out of range");
      if (!seen.insert(e).second)
        throw TropError(ErrorCode::Invariant, "cross-ratio ends not distinct");
    }
    if (x.tropical == 0)
      throw TropError(ErrorCode::Invariant, "tropical cross-ratio must be nonzero");
    if (x.leading_coefficient == 0)
      throw TropError(ErrorCode::Invariant, "zero cross-ratio coefficient");
  }

  if (sign_vector) {
    if (sign_vector->size() != sign_length())
      throw TropError(ErrorCode::Invariant, "sign vector length mismatch");
    for (int s : *sign_vector)
      if (s != 1 && s != -1)
        throw TropError(ErrorCode::Invariant, "sign vector entries must be +-1");
  }
  if (lift_order && *lift_order < 1)
    throw TropError(ErrorCode::Invariant, "lift order must be positive");

  validated_ = true;
}

bool ProblemSpec::dimension_condition() const {
  if (!validated_)
    throw TropError(ErrorCode::Internal, "problem data not validated");
  return constraint_rank_sum() + cross_ratios.size() ==
         static_cast<std::size_t>(ends() - 1);
}

void ProblemSpec::require_dimension_condition() const {
  if (!dimension_condition())
    throw TropError(ErrorCode::DimensionCondition,
                    "constraint count does not match curve moduli: need "
                    "sum of quotient ranks + cross-ratio count = ends - 1");
}

}  // namespace tropcount
