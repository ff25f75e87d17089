// Cross-checks of the enumerative pipeline against counts that are known
// classically and against invariance properties of the totals.

#include "doctest.h"
#include "test_helpers.hpp"
#include "tropcount/enumerate.hpp"

using namespace tropcount;
using namespace tropcount::testing;

namespace {

ProblemSpec plane_lines_through(const RatVec& p4, const RatVec& p5) {
  ProblemSpec spec;
  spec.rank = 2;
  spec.degrees = {int_vec({1, 0}), int_vec({0, 1}), int_vec({-1, -1}),
                  int_vec({0, 0}), int_vec({0, 0})};
  spec.constraints.resize(5);
  for (int i = 0; i < 3; ++i) spec.constraints[i].lattice = IntMatrix::identity(2);
  spec.constraints[3].lattice = IntMatrix(0, 2);
  spec.constraints[3].point = p4;
  spec.constraints[4].lattice = IntMatrix(0, 2);
  spec.constraints[4].point = p5;
  spec.validate();
  return spec;
}

ProblemSpec quadric_sections_through(const RatVec& a, const RatVec& b,
                                     const RatVec& c) {
  ProblemSpec spec;
  spec.rank = 2;
  spec.degrees = {int_vec({1, 0}), int_vec({-1, 0}), int_vec({0, 1}),
                  int_vec({0, -1}), int_vec({0, 0}), int_vec({0, 0}),
                  int_vec({0, 0})};
  spec.constraints.resize(7);
  for (int i = 0; i < 4; ++i) spec.constraints[i].lattice = IntMatrix::identity(2);
  for (int i = 4; i < 7; ++i) spec.constraints[i].lattice = IntMatrix(0, 2);
  spec.constraints[4].point = a;
  spec.constraints[5].point = b;
  spec.constraints[6].point = c;
  spec.validate();
  return spec;
}

}  // namespace

TEST_CASE("exactly one line passes through two general points") {
  for (auto [x, y] : {std::pair{Rat(3), Rat(1)}, {Rat(7), Rat(2)},
                      {make_rat(Int(5), Int(2)), Rat(4)}}) {
    ProblemSpec spec = plane_lines_through(rat_vec({0, 0}), {x, y});
    EnumerationResult result = enumerate_curves(spec);
    REQUIRE(result.tropically_general);
    CHECK(*result.total_complex == 1);
    CHECK(result.curves.size() == 1);
    CHECK(*result.curves[0].report.m_complex == 1);
    // the real count through real points is the same single line
    EnumerationResult real =
        enumerate_curves(spec, std::vector<int>(spec.sign_length(), 1));
    CHECK(*real.total_real == 1);
  }
}

TEST_CASE("exactly one bidegree-(1,1) curve passes through three general points") {
  ProblemSpec spec = quadric_sections_through(rat_vec({0, 0}), rat_vec({4, 1}),
                                              rat_vec({9, 7}));
  EnumerationResult result = enumerate_curves(spec);
  CHECK(result.types_visited == 945);
  REQUIRE(result.tropically_general);
  CHECK(*result.total_complex == 1);
  EnumerationResult real =
      enumerate_curves(spec, std::vector<int>(spec.sign_length(), 1));
  CHECK(*real.total_real == 1);
}

TEST_CASE("the toy count is a wall-crossing invariant") {
  // the complex total stays 2 for every tropically general position
  int general_samples = 0;
  for (int trial = 0; trial < 12; ++trial) {
    ProblemSpec spec = toy_problem();
    spec.constraints[4].point = {Rat(rand_int(-4, 4)), Rat(rand_int(-4, 4))};
    spec.constraints[5].point = {spec.constraints[4].point[0] + rand_int(1, 9),
                                 spec.constraints[4].point[1] + rand_int(1, 9)};
    spec.cross_ratios[0].tropical = Rat(rand_int(1, 14));
    spec.validate();
    EnumerationResult result = enumerate_curves(spec);
    if (!result.tropically_general) continue;  // a wall: count not protected
    ++general_samples;
    CHECK(*result.total_complex == 2);
    // multiplicities match determinants curve by curve
    for (const AcceptedCurve& a : result.curves) {
      DeformationComplex complex = build_deformation_complex(a.curve, spec);
      CHECK(*a.report.m_complex == abs(complex.matrix.det()));
    }
  }
  CHECK(general_samples >= 4);
}

TEST_CASE("random five-end problems run clean and translate equivariantly") {
  int general = 0;
  for (int trial = 0; trial < 40; ++trial) {
    ProblemSpec spec;
    spec.rank = 2;
    IntVec a = int_vec({rand_int(-2, 2), rand_int(-2, 2)});
    IntVec b = int_vec({rand_int(-2, 2), rand_int(-2, 2)});
    if (is_zero(a) || is_zero(b)) continue;
    spec.degrees = {a, b, negate(add(a, b)), int_vec({0, 0}), int_vec({0, 0})};
    spec.constraints.resize(5);
    for (int i = 0; i < 3; ++i) spec.constraints[i].lattice = IntMatrix::identity(2);
    spec.constraints[3].lattice = IntMatrix(0, 2);
    spec.constraints[3].point = {Rat(rand_int(-6, 6)), Rat(rand_int(-6, 6))};
    spec.constraints[4].lattice = IntMatrix(0, 2);
    spec.constraints[4].point = {Rat(rand_int(-6, 6)), Rat(rand_int(-6, 6))};
    spec.validate();
    if (!spec.dimension_condition()) continue;

    EnumerationResult result = enumerate_curves(spec);
    CHECK(result.types_visited == 15);
    if (!result.tropically_general || !result.total_complex) continue;
    ++general;
    CHECK(validate_genericity(result, spec).empty());
    for (const AcceptedCurve& curve : result.curves) {
      for (int i = 1; i <= 5; ++i) CHECK(check_affine_constraint(curve.curve, spec, i));
      DeformationComplex complex = build_deformation_complex(curve.curve, spec);
      CHECK(*curve.report.m_complex == abs(complex.matrix.det()));
    }
    // translating both points moves the curves without changing the total
    ProblemSpec moved = spec;
    moved.constraints[3].point[0] += 5;
    moved.constraints[4].point[0] += 5;
    moved.validate();
    EnumerationResult shifted = enumerate_curves(moved);
    CHECK(*shifted.total_complex == *result.total_complex);
  }
  CHECK(general >= 10);
}
