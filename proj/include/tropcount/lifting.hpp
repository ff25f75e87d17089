#pragma once

#include "tropcount/enumerate.hpp"
#include "tropcount/tseries.hpp"

namespace tropcount {

// One point of the multiplicative variable space: a character per finite
// vertex (its values on the standard basis) and a unit scale per bounded
// edge. The chart offsets (beta) are fixed by the context.
struct LiftState {
  std::vector<std::vector<TSeries>> characters;  // [vertex][coordinate]
  std::vector<TSeries> scales;                   // [bounded edge]
};

struct LiftedMap {
  LiftState state;
  std::vector<TSeries> marked_points;  // chart coordinates of q_1..q_{r-1} at v_r
  long achieved_order = 0;             // residual order reached, in pi-units
  std::vector<long> residual_orders;   // one entry per iteration, strictly increasing
  int ramification = 1;
};

// The three blocks of the gluing map evaluated at a state, before the
// character/scale monomials are multiplied in.
struct GluingFactors {
  std::vector<std::vector<TSeries>> edge;        // [bounded edge][coordinate]
  std::vector<std::vector<TSeries>> constraint;  // [end][projection row]
  std::vector<TSeries> cross_ratio;              // [cross-ratio index]
};

// Realizes a tropical solution algebraically: builds the vertex charts of
// the curve, the multiplicative gluing map, and refines a residue-field
// solution one pi-order at a time until the requested t-order.
class AlgebraicLift {
 public:
  // `t_order`: residual agreement demanded in t-exponent units.
  // `essential_beta`: chart offsets for essential edges in iota order
  // (required when the tree is not trivalent; overrides the problem's list).
  AlgebraicLift(const TropicalCurve& curve, const ProblemSpec& spec, int t_order,
                std::optional<std::vector<Rat>> essential_beta = {});

  int ramification() const { return ram_; }
  long working_truncation() const { return work_trunc_; }
  long target_order() const { return stop_order_; }
  const TropicalCurve& curve() const { return curve_; }
  const ProblemSpec& problem() const { return spec_; }
  const DeformationComplex& complex() const { return complex_; }
  const Rat& offset(int eid) const;  // beta of a non-root edge
  long edge_exponent(int eid) const; // length in pi-units

  // chart coordinate of marked point `end` in the chart of `vertex`
  TSeries chart_coordinate(const LiftState& state, int vertex, int end) const;
  // chart coordinates of all movable marked points at the root-adjacent vertex
  std::vector<TSeries> marked_points(const LiftState& state) const;

  GluingFactors gluing_factors(const LiftState& state) const;
  // full map, one unit series per deformation-matrix row
  std::vector<TSeries> theta_map(const LiftState& state) const;
  const std::vector<TSeries>& target_vector() const { return target_; }

  // all rational residue-field solutions, up to the complex multiplicity
  std::vector<LiftState> initial_solutions() const;
  LiftedMap lift(const LiftState& initial) const;
  std::vector<LiftedMap> lift_all() const;

  // tropicalization of a lift reproduces the source curve: unit scales and
  // chart-difference valuations matching path lengths
  bool reproduces_tropical_curve(const LiftedMap& lifted, std::string* why = nullptr) const;

 private:
  struct CrossRatioGeometry {
    std::array<int, 4> quad{};
    int near_vertex = 0;   // carries the first and third ends
    int far_vertex = 0;    // carries the second and fourth ends
    int top_vertex = 0;    // minimal vertex along the connecting path
    std::vector<int> path_edges;
    Rat coefficient;       // algebraic leading value, after normalization
  };

  LiftState ones_state() const;
  TSeries descent_factor(const LiftState& state, int top, int bottom) const;
  std::optional<LiftState> solve_residue_system(const std::vector<Rat>& targets,
                                                std::vector<LiftState>& out) const;

  TropicalCurve curve_;
  ProblemSpec spec_;  // cross-ratio rows normalized to positive tropical value
  int ram_ = 1;
  long stop_order_ = 0;
  long work_trunc_ = 0;
  std::vector<long> edge_exponents_;  // pi-units per bounded edge
  std::vector<Rat> offsets_;          // beta per edge id (root end unused)
  std::vector<CrossRatioGeometry> geometry_;
  DeformationComplex complex_;
  SmithDecomposition snf_;
  RatMatrix inverse_;
  std::vector<TSeries> target_;
};

}  // namespace tropcount
