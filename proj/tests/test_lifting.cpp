#include <set>

#include "doctest.h"
#include "test_helpers.hpp"
#include "tropcount/lifting.hpp"

using namespace tropcount;
using namespace tropcount::testing;

namespace {

// Degree-two cover of the line: slopes 2,-2 and two contracted marked
// points pinned to p3 and p4 of Q^1. The surviving tree type has
// multiplicity 2 (one even divisor). Rank-1 problems fall outside the
// enumerator's dimension precondition, so tests drive the library layer
// on the hand-built solution curve.
ProblemSpec double_cover_problem(const Rat& p3, const Rat& p4,
                                 const Rat& c3 = Rat(1), const Rat& c4 = Rat(1)) {
  ProblemSpec spec;
  spec.rank = 1;
  spec.degrees = {int_vec({2}), int_vec({-2}), int_vec({0}), int_vec({0})};
  spec.constraints.resize(4);
  spec.constraints[0].lattice = IntMatrix::identity(1);
  spec.constraints[1].lattice = IntMatrix::identity(1);
  spec.constraints[2].lattice = IntMatrix(0, 1);
  spec.constraints[2].point = {p3};
  spec.constraints[2].leading_coefficients = RatVec{c3};
  spec.constraints[3].lattice = IntMatrix(0, 1);
  spec.constraints[3].point = {p4};
  spec.constraints[3].leading_coefficients = RatVec{c4};
  spec.validate();
  return spec;
}

TropicalCurve double_cover_curve(const ProblemSpec& spec) {
  MarkedTree t;
  t.ends = 4;
  t.finite_count = 2;
  t.end_vertex = {0, 1, 0, 1};  // ends 1,3 left; ends 2,4 right (root side)
  t.bounded = {{0, 1}};
  Rat length = (spec.constraints[2].point[0] - spec.constraints[3].point[0]) / 2;
  return make_curve(t, spec.degrees, {length}, {spec.constraints[3].point[0]});
}

}  // namespace

TEST_CASE("double cover: even multiplicity and its sign calculus") {
  ProblemSpec spec = double_cover_problem(Rat(4), Rat(0));
  TropicalCurve curve = double_cover_curve(spec);
  MultiplicityReport report = multiplicity_report(curve, spec);
  CHECK(report.epsilon_even == 1);
  CHECK(*report.m_complex == 2);

  // real multiplicities over all sign choices: half vanish, half give 2
  DeformationComplex complex = build_deformation_complex(curve, spec);
  std::multiset<Int> reals;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      reals.insert(real_multiplicity(complex, {s1, s2}));
  CHECK(reals == std::multiset<Int>{Int(0), Int(0), Int(2), Int(2)});
  CHECK(real_multiplicity(complex, {1, 1}) == 2);
}

TEST_CASE("double cover lifts with ramification two") {
  // p3 = 3 forces a half-integral edge length
  ProblemSpec spec = double_cover_problem(Rat(3), Rat(0));
  TropicalCurve curve = double_cover_curve(spec);
  CHECK(curve.lengths[0] == make_rat(Int(3), Int(2)));

  AlgebraicLift lift(curve, spec, 8);
  CHECK(lift.ramification() == 2);
  auto lifted = lift.lift_all();
  REQUIRE(lifted.size() == 2);  // matches the complex multiplicity
  for (const LiftedMap& m : lifted) {
    CHECK(m.achieved_order >= lift.target_order());
    for (std::size_t k = 1; k < m.residual_orders.size(); ++k)
      CHECK(m.residual_orders[k] > m.residual_orders[k - 1]);
    std::string why;
    CHECK_MESSAGE(lift.reproduces_tropical_curve(m, &why), why);
  }
  // the two lifts differ already in their residue solutions
  CHECK(lifted[0].state.scales[0].coefficient(0) !=
        lifted[1].state.scales[0].coefficient(0));
}

TEST_CASE("irrational initial roots fail loudly") {
  ProblemSpec spec = double_cover_problem(Rat(3), Rat(0), Rat(2), Rat(1));
  AlgebraicLift lift(double_cover_curve(spec), spec, 6);
  CHECK_THROWS_AS(lift.initial_solutions(), TropError);
  try {
    lift.initial_solutions();
  } catch (const TropError& e) {
    CHECK(e.code() == ErrorCode::FieldExtensionRequired);
  }
}

TEST_CASE("toy example: both curves lift uniquely") {
  ProblemSpec spec = toy_problem();
  EnumerationResult result = enumerate_curves(spec);
  REQUIRE(result.curves.size() == 2);
  int total_lifts = 0;
  for (const AcceptedCurve& accepted : result.curves) {
    AlgebraicLift lift(accepted.curve, spec, 10);
    CHECK(lift.ramification() == 1);

    // at any iterate the map rows are units; at the solution they hit the
    // target to the requested order
    auto lifted = lift.lift_all();
    REQUIRE(lifted.size() == 1);
    total_lifts += static_cast<int>(lifted.size());
    const LiftedMap& m = lifted[0];
    CHECK(m.achieved_order >= lift.target_order());
    for (std::size_t k = 1; k < m.residual_orders.size(); ++k)
      CHECK(m.residual_orders[k] > m.residual_orders[k - 1]);
    auto rows = lift.theta_map(m.state);
    for (std::size_t k = 0; k < rows.size(); ++k)
      CHECK(rows[k].agrees_below(lift.target_vector()[k], lift.target_order()));

    // tropicalization returns the source curve
    std::string why;
    CHECK_MESSAGE(lift.reproduces_tropical_curve(m, &why), why);

    // chart coordinates at the root vertex: ends attached there read off
    // their chart offsets
    const MarkedTree& tree = accepted.curve.tree();
    int root = accepted.curve.rooted.root_vertex;
    for (int i = 1; i < tree.ends; ++i) {
      if (tree.end_vertex[i - 1] != root) continue;
      const TSeries& y = m.marked_points[i - 1];
      CHECK(y.coefficient(0) == lift.offset(tree.end_edge_id(i)));
      for (long e = 1; e < 5; ++e) CHECK(y.coefficient(e) == 0);
    }

    // chart valuations reproduce the subtree pattern
    for (int w = 0; w < tree.finite_count; ++w)
      for (int i = 1; i < tree.ends; ++i) {
        TSeries y = lift.chart_coordinate(m.state, w, i);
        if (accepted.curve.rooted.is_above(i, w)) {
          // exact zeros (offset 0 at the base) count as valuation infinity
          if (!y.known_zero()) CHECK(*y.valuation() >= 0);
        } else {
          REQUIRE(!y.known_zero());
          CHECK(*y.valuation() < 0);
        }
      }

    // restarting from the solved state terminates immediately
    LiftedMap again = lift.lift(m.state);
    CHECK(again.residual_orders.size() == 1);
    CHECK(again.achieved_order >= lift.target_order());
  }
  CHECK(total_lifts == 2);
}

TEST_CASE("small scale perturbations move the factors only beyond their order") {
  ProblemSpec spec = toy_problem();
  EnumerationResult result = enumerate_curves(spec);
  REQUIRE(!result.curves.empty());
  AlgebraicLift lift(result.curves[0].curve, spec, 8);
  LiftState base = lift.lift_all()[0].state;

  for (long d : {2L, 4L, 6L}) {
    LiftState moved = base;
    for (TSeries& scale : moved.scales) {
      Rat bump = make_rat(Int(rand_int(-5, 5)), Int(rand_int(1, 3)));
      scale = scale * (TSeries::constant(Rat(1), lift.ramification(),
                                         lift.working_truncation()) +
                       TSeries::monomial(bump, d, lift.ramification(),
                                         lift.working_truncation()));
    }
    GluingFactors before = lift.gluing_factors(base);
    GluingFactors after = lift.gluing_factors(moved);
    for (std::size_t e = 0; e < before.edge.size(); ++e)
      for (std::size_t c = 0; c < before.edge[e].size(); ++c)
        CHECK(before.edge[e][c].agrees_below(after.edge[e][c], d + 1));
    for (std::size_t j = 0; j < before.constraint.size(); ++j)
      for (std::size_t l = 0; l < before.constraint[j].size(); ++l)
        CHECK(before.constraint[j][l].agrees_below(after.constraint[j][l], d + 1));
    for (std::size_t x = 0; x < before.cross_ratio.size(); ++x)
      CHECK(before.cross_ratio[x].agrees_below(after.cross_ratio[x], d + 1));
  }
}

TEST_CASE("lift rejects curves that misfit the constraints") {
  ProblemSpec spec = toy_problem();
  EnumerationResult result = enumerate_curves(spec);
  TropicalCurve bad = result.curves[0].curve;
  for (RatVec& p : bad.positions) p[0] += 1;  // break the point constraints
  CHECK_THROWS_AS(AlgebraicLift(bad, spec, 5), TropError);
}

namespace {

// Five ends with one four-valent vertex: the chart offset of the middle
// upward edge is a free parameter that the problem data must pin down.
ProblemSpec four_valent_problem(std::array<int, 4> quad, const Rat& value,
                                std::vector<Rat> essential) {
  ProblemSpec spec;
  spec.rank = 2;
  spec.degrees = {int_vec({1, 0}), int_vec({0, 1}), int_vec({-1, 0}),
                  int_vec({0, -1}), int_vec({0, 0})};
  spec.constraints.resize(5);
  for (int i = 0; i < 4; ++i) spec.constraints[i].lattice = IntMatrix::identity(2);
  spec.constraints[4].lattice = IntMatrix(0, 2);
  spec.constraints[4].point = rat_vec({0, 0});
  CrossRatioConstraint x;
  x.ends = quad;
  x.tropical = value;
  spec.cross_ratios.push_back(x);
  spec.essential_beta = std::move(essential);
  spec.validate();
  return spec;
}

TropicalCurve four_valent_curve(const ProblemSpec& spec, const Rat& length) {
  MarkedTree t;
  t.ends = 5;
  t.finite_count = 2;
  t.end_vertex = {0, 0, 1, 1, 1};  // ends 1,2 on the branch; 3,4,5 at the root
  t.bounded = {{0, 1}};
  return make_curve(t, spec.degrees, {length}, rat_vec({0, 0}));
}

}  // namespace

TEST_CASE("a four-valent vertex lifts once the essential offset is supplied") {
  ProblemSpec spec = four_valent_problem({1, 3, 2, 4}, Rat(2), {make_rat(Int(1), Int(3))});
  TropicalCurve curve = four_valent_curve(spec, Rat(2));
  CHECK(curve.rooted.essential_edges.size() == 1);
  MultiplicityReport report = multiplicity_report(curve, spec);
  CHECK(*report.m_complex == 1);

  AlgebraicLift lift(curve, spec, 8);
  CHECK(lift.offset(curve.tree().end_edge_id(3)) == make_rat(Int(1), Int(3)));
  auto lifted = lift.lift_all();
  REQUIRE(lifted.size() == 1);
  std::string why;
  CHECK_MESSAGE(lift.reproduces_tropical_curve(lifted[0], &why), why);
  for (std::size_t k = 1; k < lifted[0].residual_orders.size(); ++k)
    CHECK(lifted[0].residual_orders[k] > lifted[0].residual_orders[k - 1]);

  // classical cross-ratio of the lifted marked points hits the algebraic
  // target: quadruple (1,3,2,4) in the root chart
  const auto& y = lifted[0].marked_points;
  TSeries value = (y[1] - y[0]) * (y[3] - y[2]) / ((y[3] - y[0]) * (y[1] - y[2]));
  TSeries expect = TSeries::monomial(Rat(1), 2, 1, value.truncation());
  CHECK(value.difference_order(expect) >= lift.target_order());

  // without the offset the context cannot be built
  ProblemSpec missing = four_valent_problem({1, 3, 2, 4}, Rat(2), {});
  CHECK_THROWS_AS(AlgebraicLift(four_valent_curve(missing, Rat(2)), missing, 6),
                  TropError);
  // offsets 0 and 1 collide with the extremal charts
  ProblemSpec colliding = four_valent_problem({1, 3, 2, 4}, Rat(2), {Rat(1)});
  CHECK_THROWS_AS(AlgebraicLift(four_valent_curve(colliding, Rat(2)), colliding, 6),
                  TropError);
}

TEST_CASE("cross-ratio rows through the root end lift after normalization") {
  // the quadruple (1,3,5,2) carries the root end and a negative tropical
  // value; lifting swaps the pair and inverts the algebraic target
  ProblemSpec spec =
      four_valent_problem({1, 3, 5, 2}, Rat(-2), {make_rat(Int(2), Int(5))});
  TropicalCurve curve = four_valent_curve(spec, Rat(2));
  CHECK(cross_ratio_formula(curve, {1, 3, 5, 2}) == -2);
  AlgebraicLift lift(curve, spec, 8);
  auto lifted = lift.lift_all();
  REQUIRE(lifted.size() == 1);
  std::string why;
  CHECK_MESSAGE(lift.reproduces_tropical_curve(lifted[0], &why), why);
  CHECK(lifted[0].achieved_order >= lift.target_order());

  // quadruple (1,3,5,2): the fifth point is the pole of the root chart, so
  // the classical value degenerates to a two-factor ratio; the original
  // (uninverted) target is t^{-2}
  const auto& y = lifted[0].marked_points;
  TSeries value = (y[1] - y[2]) / (y[1] - y[0]);
  TSeries expect = TSeries::monomial(Rat(1), -2, 1, value.truncation());
  CHECK(value.difference_order(expect) >= lift.target_order() - 4);
}

TEST_CASE("gluing factor reductions ignore the scale residues entirely") {
  ProblemSpec spec = toy_problem();
  EnumerationResult result = enumerate_curves(spec);
  AlgebraicLift lift(result.curves[0].curve, spec, 6);
  LiftState base = lift.lift_all()[0].state;
  LiftState rescaled = base;
  for (TSeries& scale : rescaled.scales)
    scale = scale.scaled(make_rat(Int(rand_int(1, 9)), Int(rand_int(1, 4))));
  GluingFactors a = lift.gluing_factors(base);
  GluingFactors b = lift.gluing_factors(rescaled);
  for (std::size_t e = 0; e < a.edge.size(); ++e)
    for (std::size_t c = 0; c < a.edge[e].size(); ++c)
      CHECK(a.edge[e][c].coefficient(0) == b.edge[e][c].coefficient(0));
  for (std::size_t j = 0; j < a.constraint.size(); ++j)
    for (std::size_t l = 0; l < a.constraint[j].size(); ++l)
      CHECK(a.constraint[j][l].coefficient(0) == b.constraint[j][l].coefficient(0));
  for (std::size_t x = 0; x < a.cross_ratio.size(); ++x)
    CHECK(a.cross_ratio[x].coefficient(0) == b.cross_ratio[x].coefficient(0));
}

TEST_CASE("sign calculus matches the direct real-root count of the double cover") {
  // the algebraic solutions satisfy (chart value)^2 = ratio of the two
  // point targets, so real solutions exist exactly when the leading signs
  // multiply to +1, and then there are two of them
  ProblemSpec spec = double_cover_problem(Rat(4), Rat(0));
  TropicalCurve curve = double_cover_curve(spec);
  DeformationComplex complex = build_deformation_complex(curve, spec);
  for (int s3 : {1, -1})
    for (int s4 : {1, -1}) {
      Int expect = (s3 * s4 == 1) ? Int(2) : Int(0);
      CHECK(real_multiplicity(complex, {s3, s4}) == expect);
    }
}

TEST_CASE("vanishing real count and blocked rational lift agree") {
  // a negative target coefficient makes both the rational square root and
  // the real solutions disappear
  ProblemSpec spec = double_cover_problem(Rat(3), Rat(0), Rat(-4), Rat(1));
  TropicalCurve curve = double_cover_curve(spec);
  AlgebraicLift lift(curve, spec, 6);
  CHECK_THROWS_AS(lift.initial_solutions(), TropError);
  DeformationComplex complex = build_deformation_complex(curve, spec);
  CHECK(real_multiplicity(complex, {-1, 1}) == 0);

  // flipping the coefficient restores both: two rational lifts, real count 2
  ProblemSpec good = double_cover_problem(Rat(3), Rat(0), Rat(4), Rat(1));
  AlgebraicLift fine(double_cover_curve(good), good, 6);
  CHECK(fine.lift_all().size() == 2);
  CHECK(real_multiplicity(complex, {1, 1}) == 2);
}
