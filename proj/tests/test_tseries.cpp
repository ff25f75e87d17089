#include "doctest.h"
#include "test_helpers.hpp"
#include "tropcount/tseries.hpp"

using namespace tropcount;
using namespace tropcount::testing;

namespace {

TSeries random_series(int ram, long trunc, bool unit = false) {
  TSeries s = TSeries::zero(ram, trunc);
  long lo = unit ? 0 : rand_int(-3, 3);
  for (long e = lo; e < trunc; ++e) {
    long num = rand_int(-4, 4);
    if (unit && e == lo && num == 0) num = 1;
    if (num != 0)
      s = s + TSeries::monomial(make_rat(Int(num), Int(rand_int(1, 3))), e, ram, trunc);
  }
  if (unit && s.known_zero()) s = TSeries::constant(Rat(1), ram, trunc);
  return s;
}

}  // namespace

TEST_CASE("basic arithmetic") {
  const int T = 16;
  TSeries one = TSeries::constant(Rat(1), 1, T);
  TSeries t = TSeries::monomial(Rat(1), 1, 1, T);
  TSeries a = one + t;        // 1 + t
  TSeries b = one - t;        // 1 - t
  TSeries prod = a * b;       // 1 - t^2
  CHECK(prod.coefficient(0) == 1);
  CHECK(prod.coefficient(1) == 0);
  CHECK(prod.coefficient(2) == -1);
  CHECK(prod.coefficient(3) == 0);

  TSeries inv = a.inverse();  // geometric series
  for (long e = 0; e < T; ++e)
    CHECK(inv.coefficient(e) == (e % 2 == 0 ? 1 : -1));
}

TEST_CASE("valuation bookkeeping") {
  TSeries s = TSeries::monomial(Rat(7), 5, 2, 30);
  REQUIRE(s.valuation().has_value());
  CHECK(*s.valuation() == make_rat(Int(5), Int(2)));
  CHECK(TSeries::zero(2, 30).valuation() == std::nullopt);
  TSeries unit = TSeries::constant(Rat(3), 1, 10);
  CHECK(*unit.valuation() == 0);
  CHECK(unit.is_unit());
}

TEST_CASE("precision is conservative") {
  TSeries a = TSeries::monomial(Rat(1), 2, 1, 9);    // t^2 + O(t^9)
  TSeries b = TSeries::monomial(Rat(1), -1, 1, 4);   // t^-1 + O(t^4)
  CHECK((a + b).truncation() == 4);
  // product knows exponents below min(2+4, -1+9) = 6
  CHECK((a * b).truncation() == 6);
  CHECK((a * b).coefficient(1) == 1);
  CHECK_THROWS_AS((a * b).coefficient(6), TropError);
  // inversion costs twice the valuation
  CHECK(a.inverse().truncation() == 9 - 4);
  CHECK(a.inverse().order() == -2);
  CHECK_THROWS_AS(TSeries::zero(1, 5).inverse(), TropError);
}

TEST_CASE("ultrametric properties on random series") {
  for (int trial = 0; trial < 300; ++trial) {
    TSeries a = random_series(2, 12);
    TSeries b = random_series(2, 12);
    if (a.known_zero() || b.known_zero()) continue;
    TSeries prod = a * b;
    REQUIRE(!prod.known_zero());
    CHECK(*prod.valuation() == *a.valuation() + *b.valuation());
    TSeries sum = a + b;
    if (!sum.known_zero()) {
      Rat lower = std::min(*a.valuation(), *b.valuation());
      CHECK(*sum.valuation() >= lower);
      if (*a.valuation() != *b.valuation()) CHECK(*sum.valuation() == lower);
    }
  }
}

TEST_CASE("inverse times self is one") {
  for (int trial = 0; trial < 200; ++trial) {
    TSeries a = random_series(1, 14, true);
    TSeries prod = a * a.inverse();
    CHECK(prod.is_unit());
    CHECK(prod.leading_coefficient() == 1);
    for (long e = 1; e < prod.truncation(); ++e) CHECK(prod.coefficient(e) == 0);
  }
}

TEST_CASE("powers, shifts, scaling") {
  TSeries a = TSeries::constant(Rat(1), 1, 10) + TSeries::monomial(Rat(2), 1, 1, 10);
  TSeries sq = a.pow(2);
  CHECK(sq.coefficient(0) == 1);
  CHECK(sq.coefficient(1) == 4);
  CHECK(sq.coefficient(2) == 4);
  TSeries inv2 = a.pow(-2);
  TSeries back = sq * inv2;
  CHECK(back.leading_coefficient() == 1);
  for (long e = 1; e < back.truncation(); ++e) CHECK(back.coefficient(e) == 0);
  CHECK(a.shifted(3).order() == 3);
  CHECK(a.shifted(3).truncation() == 13);
  CHECK(a.scaled(Rat(-2)).coefficient(1) == -4);
}

TEST_CASE("difference order and agreement") {
  TSeries a = TSeries::constant(Rat(1), 1, 10);
  TSeries b = a + TSeries::monomial(Rat(1), 6, 1, 10);
  CHECK(a.difference_order(b) == 6);
  CHECK(a.agrees_below(b, 6));
  CHECK(!a.agrees_below(b, 7));
  CHECK_THROWS_AS(a.agrees_below(b, 11), TropError);
}

TEST_CASE("printing") {
  TSeries s = TSeries::monomial(make_rat(Int(3), Int(2)), 5, 2, 9) +
              TSeries::constant(Rat(-1), 2, 9);
  CHECK(s.str() == "-1 + 3/2*t^(5/2) + O(t^(9/2))");
  CHECK(TSeries::zero(1, 4).str() == "O(t^4)");
}
