#pragma once

#include <array>
#include <optional>

#include "tropcount/smith.hpp"

namespace tropcount {

// Toric constraint at one end: the marked point must land on the affine
// subspace point + span(lattice). The projection and quotient-coordinate
// target are derived, not user input.
struct AffineConstraint {
  IntMatrix lattice;   // generator rows of the sublattice, possibly 0 x n
  RatVec point;        // representative of the affine target in Q^n

  // derived on validation:
  IntMatrix projection;  // quotient map, (n - rank) x n
  RatVec target;         // projection * point
  std::size_t quotient_rank = 0;

  // optional algebraic data: leading coefficient per standard coordinate of
  // the monomial point coef_c * t^{point_c}; defaults to all ones
  std::optional<RatVec> leading_coefficients;
};

struct CrossRatioConstraint {
  std::array<int, 4> ends{};  // one row of the index matrix, 1-based
  Rat tropical;               // nonzero
  Rat leading_coefficient{1}; // algebraic leading term, defaults to 1
};

// The fixed data of an enumeration problem.
struct ProblemSpec {
  int rank = 0;                    // n
  std::vector<IntVec> degrees;     // slopes of the r ends, zero sum
  std::vector<AffineConstraint> constraints;  // one per end
  std::vector<CrossRatioConstraint> cross_ratios;

  std::optional<int> lift_order;
  std::optional<std::vector<int>> sign_vector;  // +/-1 per constraint+cross-ratio row
  std::vector<Rat> essential_beta;  // chart offsets for essential edges, by iota order

  int ends() const { return static_cast<int>(degrees.size()); }
  int cross_ratio_count() const { return static_cast<int>(cross_ratios.size()); }
  std::size_t constraint_rank_sum() const;
  // number of constraint + cross-ratio rows of the deformation matrix
  std::size_t sign_length() const { return constraint_rank_sum() + cross_ratios.size(); }

  // Checks all structural invariants and fills the derived projection data.
  // Throws TropError(Invariant) with a message naming the violation.
  void validate();
  bool validated() const { return validated_; }

  // The balanced-count condition; enumeration requires it.
  bool dimension_condition() const;
  void require_dimension_condition() const;

 private:
  bool validated_ = false;
};

}  // namespace tropcount
