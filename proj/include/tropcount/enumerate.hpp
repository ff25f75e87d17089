#pragma once

#include "tropcount/deformation.hpp"
#include "tropcount/solve.hpp"

namespace tropcount {

enum class Rejection {
  NoSolution,        // linear system inconsistent for this combinatorial type
  NonpositiveLength, // unique solution with a negative length
  SingularSystem,    // solution space has positive dimension
  GeneralityViolation, // zero length: the constraints sit on a wall
};

const char* rejection_name(Rejection r);

struct RejectedType {
  int type_index = 0;  // position in the deterministic enumeration order
  std::vector<std::uint32_t> tree_key;
  Rejection reason = Rejection::NoSolution;
};

struct AcceptedCurve {
  int type_index = 0;
  TropicalCurve curve;
  MultiplicityReport report;
};

struct EnumerationResult {
  std::vector<AcceptedCurve> curves;
  // sum of the complex multiplicities; absent when some accepted curve is
  // superabundant (nontrivial cokernel despite a unique solution)
  std::optional<Int> total_complex{Int(0)};
  std::optional<Int> total_real;  // present when a sign vector was supplied
  std::vector<RejectedType> diagnostics;
  bool tropically_general = true;
  int types_visited = 0;
};

// Runs the full pipeline over all trivalent combinatorial types: propagate
// slopes, solve the deformation system against the constraint targets,
// keep the types with a unique all-positive-length solution, and attach
// multiplicities. Requires the dimension condition.
EnumerationResult enumerate_curves(const ProblemSpec& spec,
                                   const std::optional<std::vector<int>>& sign = {});

struct GenericityViolation {
  int curve_index = 0;
  int kind = 0;  // 1 = coinciding vertices, 2 = vertex on edge, 3 = contracted valence
  std::string detail;
};

// Structural checks every curve through tropically general constraints must
// pass: coinciding vertex images force contracted geodesics, a vertex image
// on another edge's image forces a straight interval, and contracted-edge
// valences stay in {0,1,3}.
std::vector<GenericityViolation> validate_genericity(const EnumerationResult& result,
                                                     const ProblemSpec& spec);
std::vector<GenericityViolation> validate_curve_genericity(const TropicalCurve& curve,
                                                           const ProblemSpec& spec,
                                                           int curve_index = 0);

}  // namespace tropcount
