#include "doctest.h"
#include "test_helpers.hpp"
#include "tropcount/solve.hpp"

using namespace tropcount;
using namespace tropcount::testing;

TEST_CASE("identity system") {
  RatMatrix a = RatMatrix::identity(3);
  RatVec b = rat_vec({5, -2, 7});
  LinearSolution sol = solve_rational(a, b);
  CHECK(sol.unique());
  CHECK(*sol.particular == b);
}

TEST_CASE("zero 1x1 system") {
  RatMatrix a(1, 1);
  LinearSolution sol = solve_rational(a, rat_vec({0}));
  CHECK(sol.consistent());
  CHECK(sol.kernel.size() == 1);
  CHECK((*sol.particular)[0] == 0);
  LinearSolution bad = solve_rational(a, rat_vec({1}));
  CHECK(!bad.consistent());
}

TEST_CASE("substitution closes the loop on random systems") {
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t m = static_cast<std::size_t>(rand_int(1, 5));
    std::size_t n = static_cast<std::size_t>(rand_int(1, 5));
    RatMatrix a = RatMatrix::from_int(random_int_matrix(m, n, -5, 5));
    RatVec b(m);
    for (std::size_t i = 0; i < m; ++i) b[i] = Rat(rand_int(-5, 5));
    LinearSolution sol = solve_rational(a, b);
    if (sol.consistent()) CHECK(a.apply(*sol.particular) == b);
    for (const RatVec& k : sol.kernel) {
      RatVec zero(m, Rat(0));
      CHECK(a.apply(k) == zero);
    }
    CHECK(sol.kernel.size() + sol.rank == n);
  }
}

TEST_CASE("exact inverse") {
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = static_cast<std::size_t>(rand_int(1, 5));
    IntMatrix m = random_int_matrix(n, n);
    if (m.det() == 0) continue;
    RatMatrix a = RatMatrix::from_int(m);
    RatMatrix inv = invert_rational(a);
    CHECK(a * inv == RatMatrix::identity(n));
  }
  CHECK_THROWS_AS(invert_rational(RatMatrix(2, 2)), TropError);
}
