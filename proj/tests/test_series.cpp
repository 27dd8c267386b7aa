#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "linksing/series.hpp"

using namespace linksing;

namespace {

std::mt19937 rng(987231);

LaurentPoly random_small_poly() {
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<int> aexp(0, 3);
  std::uniform_int_distribution<int> qexp(-3, 6);
  std::uniform_int_distribution<int> coef(-5, 5);
  LaurentPoly p;
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) p.add_term(aexp(rng), qexp(rng), coef(rng));
  return p;
}

}  // namespace

TEST_CASE("geometric expansion") {
  TruncSeries s = TruncSeries::expand(LaurentPoly::one(), {2}, 8);
  CHECK(s.coeff(0).is_one());
  CHECK(s.coeff(2).is_one());
  CHECK(s.coeff(4).is_one());
  CHECK(s.coeff(6).is_one());
  CHECK(s.coeff(1).is_zero());
  CHECK(s.coeff(7).is_zero());
}

TEST_CASE("telescoping to one") {
  LaurentPoly num = LaurentPoly::one() - LaurentPoly::monomial(1, 0, 2);
  TruncSeries s = TruncSeries::expand(num, {2}, 8);
  CHECK(s.equals_below_common(TruncSeries::from_poly(LaurentPoly::one(), 8)));
}

TEST_CASE("representation count as a series coefficient") {
  // Coefficient of q^12 in 1/((1-q^4)(1-q^6)) counts 12 = 4a + 6b.
  int direct = 0;
  for (int a = 0; 4 * a <= 12; ++a)
    for (int b = 0; 4 * a + 6 * b <= 12; ++b)
      if (4 * a + 6 * b == 12) ++direct;
  REQUIRE(direct == 2);

  TruncSeries s = TruncSeries::expand(LaurentPoly::one(), {4, 6}, 14);
  CHECK(s.coeff(12) == LaurentPoly::constant(direct));
}

TEST_CASE("expansion is multiplicative") {
  for (int i = 0; i < 100; ++i) {
    LaurentPoly f = random_small_poly();
    LaurentPoly g = random_small_poly();
    TruncSeries lhs = TruncSeries::expand(f * g, {2, 3}, 25);
    TruncSeries rhs = TruncSeries::expand(f, {2}, 25) * TruncSeries::expand(g, {3}, 25);
    CHECK(lhs.equals_below_common(rhs));
  }
}

TEST_CASE("truncation bookkeeping") {
  TruncSeries a = TruncSeries::from_poly(LaurentPoly::one(), 10);
  TruncSeries b = TruncSeries::from_poly(LaurentPoly::one(), 7);
  CHECK((a + b).trunc() == 7);
  CHECK((a * b).trunc() == 7);

  // A polynomial factor with negative q-powers lowers the window.
  TruncSeries c = a.mul_poly(LaurentPoly::monomial(1, 0, -3));
  CHECK(c.trunc() == 7);
  CHECK(c.coeff(-3).is_one());
}

TEST_CASE("lift of a stabilized series") {
  LaurentPoly num = LaurentPoly::one() - LaurentPoly::monomial(1, 0, 2);
  TruncSeries s = TruncSeries::expand(num, {2}, 30);
  CHECK(s.lift(0) == LaurentPoly::one());
}

TEST_CASE("lift refuses a genuinely infinite series") {
  TruncSeries s = TruncSeries::expand(LaurentPoly::one(), {2}, 40);
  CHECK_THROWS_AS(s.lift(10), NotStabilized);
}

TEST_CASE("lift refuses a window below the margin") {
  TruncSeries s = TruncSeries::from_poly(LaurentPoly::one(), 12);
  CHECK_THROWS_AS(s.lift(0, 20), NotStabilized);
}

TEST_CASE("lift of the cusp series reproduces the trefoil value") {
  // 1 + sum_{i>=2} q^{2i} + (1-a^2) sum_{i>=1} q^{2i}, then (a/q)^2 (1-q^2).
  const int N = 40;
  LaurentPoly one_minus_a2 = LaurentPoly::one() - LaurentPoly::monomial(1, 2, 0);
  TruncSeries cusp = TruncSeries::from_poly(LaurentPoly::one(), N) +
                     TruncSeries::expand(LaurentPoly::monomial(1, 0, 4), {2}, N) +
                     TruncSeries::expand(one_minus_a2.shifted(0, 2), {2}, N);
  LaurentPoly prefactor =
      LaurentPoly::monomial(1, 2, -2) - LaurentPoly::monomial(1, 2, 0);
  LaurentPoly lifted = cusp.mul_poly(prefactor).lift(4);
  CHECK(lifted == LaurentPoly::parse("a^2*q^2 + a^2*q^-2 - a^4"));
}

TEST_CASE("substitution on series") {
  LaurentPoly one_minus_a2 = LaurentPoly::one() - LaurentPoly::monomial(1, 2, 0);
  TruncSeries s = TruncSeries::expand(one_minus_a2, {2}, 20);

  SUBCASE("a := q turns the smooth-point series into 1") {
    TruncSeries t = s.substitute(Subst::a_to_q);
    CHECK(t.equals_below_common(TruncSeries::from_poly(LaurentPoly::one(), 20)));
  }
  SUBCASE("a := 0 leaves the plain geometric series") {
    TruncSeries t = s.substitute(Subst::a_to_zero);
    CHECK(t.equals_below_common(TruncSeries::expand(LaurentPoly::one(), {2}, 20)));
  }
  SUBCASE("exact coefficient-wise division") {
    TruncSeries t = s.divide_exact(one_minus_a2);
    CHECK(t.equals_below_common(TruncSeries::expand(LaurentPoly::one(), {2}, 20)));
  }
}

TEST_CASE("first mismatch is located") {
  TruncSeries a = TruncSeries::expand(LaurentPoly::one(), {2}, 20);
  TruncSeries b = a + TruncSeries::from_poly(LaurentPoly::monomial(3, 1, 6), 20);
  auto m = a.first_mismatch(b);
  REQUIRE(m.has_value());
  CHECK(*m == 6);
  CHECK(!a.first_mismatch(a).has_value());
}
