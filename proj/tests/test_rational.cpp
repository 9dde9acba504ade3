#include "doctest.h"

#include <string>
#include <vector>

#include "ene/product.hpp"
#include "ene/rational.hpp"

using namespace ene;

namespace {

const Ring Q = Ring::rationals();

UnitSeries upoly(const Ring& r, const std::vector<std::string>& tail) {
  return unit_from(r, static_cast<int>(tail.size()), tail);
}

}  // namespace

TEST_CASE("quotient product on a small explicit pair") {
  // (1-2X)/(1-3X) against (1-5X)/1
  RationalPair r1(upoly(Q, {"-2"}), upoly(Q, {"-3"}));
  RationalPair r2(upoly(Q, {"-5"}), UnitSeries::one(Q, 0));
  RationalPair got = ene_rational(r1, r2, 6);
  CHECK(got.num_degree() == 1);
  CHECK(got.den_degree() == 1);
  CHECK(agree_to_order(got.num(), poly_extend(upoly(Q, {"-10"}), got.num().order()), 6));
  CHECK(agree_to_order(got.den(), poly_extend(upoly(Q, {"-15"}), got.den().order()), 6));
  // one factor is a pure polynomial, so the total degree is multiplicative
  CHECK(got.degree() == r1.degree() * r2.degree());
}

TEST_CASE("mixed quotients carry structural degrees instead") {
  RationalPair r1(upoly(Q, {"-2"}), upoly(Q, {"-3"}));
  RationalPair r2(upoly(Q, {"-5"}), upoly(Q, {"-7"}));
  RationalPair got = ene_rational(r1, r2, 4);
  // num (1-10X)(1-21X), den (1-14X)(1-15X); nothing cancels
  CHECK(got.num_degree() == 2);
  CHECK(got.den_degree() == 2);
  UnitSeries num = series_mul(poly_extend(upoly(Q, {"-10"}), 4), poly_extend(upoly(Q, {"-21"}), 4));
  UnitSeries den = series_mul(poly_extend(upoly(Q, {"-14"}), 4), poly_extend(upoly(Q, {"-15"}), 4));
  CHECK(agree_to_order(got.num(), num, 4));
  CHECK(agree_to_order(got.den(), den, 4));
}

TEST_CASE("structural degrees survive a vanishing leading coefficient") {
  // over Z/6 the product of 1+2X and 1+3X is 1 + 0X: the leading
  // coefficient dies but the declared degree must not
  Ring m6 = Ring::modular(6);
  RationalPair r1(upoly(m6, {"2"}), UnitSeries::one(m6, 0));
  RationalPair r2(upoly(m6, {"3"}), UnitSeries::one(m6, 0));
  RationalPair got = ene_rational(r1, r2, 4);
  CHECK(got.num_degree() == 1);
  CHECK(is_zero(got.num().coeff(1)));
  CHECK(got.den_degree() == 0);
}

TEST_CASE("declared degrees are validated against the data") {
  CHECK_THROWS_AS(RationalPair(upoly(Q, {"-2", "1"}), 1, UnitSeries::one(Q, 1), 0), Error);
  CHECK_NOTHROW(RationalPair(poly_extend(upoly(Q, {"-2"}), 5), 1, UnitSeries::one(Q, 5), 0));
  CHECK_THROWS_AS(ShiftedPoly(-1, UnitSeries::one(Q, 2)), Error);
}

TEST_CASE("shifted polynomials compose shifts through degrees") {
  // X(1-X) against itself: shift 1*1 + 1*1 + 1*1 = 3, unit part 1-X
  ShiftedPoly p(1, upoly(Q, {"-1"}));
  ShiftedPoly got = ene_shifted(p, p);
  CHECK(got.shift() == 3);
  CHECK(got.unit_degree() == 1);
  CHECK(got.unit_part() == upoly(Q, {"-1"}));
  CHECK(got.degree() == 4);

  // zero shifts reduce to the plain product
  ShiftedPoly a(0, upoly(Q, {"-2"}));
  ShiftedPoly b(0, upoly(Q, {"-3"}));
  ShiftedPoly ab = ene_shifted(a, b);
  CHECK(ab.shift() == 0);
  CHECK(ab.unit_part() == upoly(Q, {"-6"}));
}

TEST_CASE("coefficient reversal") {
  UnitSeries p = upoly(Q, {"2", "5", "1"});  // 1 + 2X + 5X^2 + X^3
  UnitSeries rev = reverse_poly(p);
  CHECK(rev == upoly(Q, {"5", "2", "1"}));
  CHECK(reverse_poly(rev) == p);

  // palindromes are fixed points
  UnitSeries pal = upoly(Q, {"3", "1"});  // 1 + 3X + X^2
  CHECK(reverse_poly(pal) == pal);
  CHECK(reverse_poly(UnitSeries::one(Q, 0)) == UnitSeries::one(Q, 0));

  CHECK_THROWS_AS(reverse_poly(upoly(Q, {"2"})), Error);  // leading 2
}

TEST_CASE("reversal is compatible with the product") {
  CHECK(verify_inversion(upoly(Q, {"3", "1"}), upoly(Q, {"-2", "1"})));
  CHECK(verify_inversion(upoly(Q, {"2", "5", "1"}), upoly(Q, {"3", "1"})));

  // and generically, with indeterminate middle coefficients
  Ring pr = Ring::polynomials(Q, {"a", "b"});
  UnitSeries p = UnitSeries::one(pr, 2);
  p.set_coeff(1, poly_var(pr, 0));
  p.set_coeff(2, ring_one(pr));
  UnitSeries q = UnitSeries::one(pr, 2);
  q.set_coeff(1, poly_var(pr, 1));
  q.set_coeff(2, ring_one(pr));
  CHECK(verify_inversion(p, q));
}
