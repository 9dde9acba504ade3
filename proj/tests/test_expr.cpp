#include "doctest.h"

#include <string>

#include "ene/expr.hpp"
#include "ene/product.hpp"
#include "ene/transforms.hpp"

using namespace ene;

namespace {

const Ring Q = Ring::rationals();
const Ring C = Ring::complexes();

Series ev(const std::string& text, int order = 8, const Ring& r = Q) {
  return eval_expr(text, r, order);
}

std::size_t fail_column(const std::string& text, const Ring& r = Q) {
  try {
    eval_expr(text, r, 8);
  } catch (const ParseError& e) {
    return e.column;
  }
  return 0;
}

}  // namespace

TEST_CASE("polynomial literals") {
  CHECK(ev("1 - 2*X") == poly_extend(unit_from(Q, 1, {"-2"}), 8).series());
  CHECK(ev("1 + X^2 - 3/4*X^3") == poly_extend(unit_from(Q, 3, {"0", "1", "-3/4"}), 8).series());
  // juxtaposition without the '*'
  CHECK(ev("1 + 2X^3") == ev("1 + 2*X^3"));
  CHECK(ev("-X + 1") == ev("1 - X"));
  Series justx(Q, 8);
  justx.set_coeff(1, ring_one(Q));
  CHECK(ev("X") == justx);
  // exponents beyond the order are simply absent at this truncation
  CHECK(ev("1 + X^30") == ev("1"));
}

TEST_CASE("the second product and its inverse notation") {
  CHECK(ev("(1 - 2*X) @ (1 - 3*X)") == poly_extend(unit_from(Q, 1, {"-6"}), 8).series());
  CHECK(ev("(1 - X - X^2) INV @ (1 - X - X^2)") == ev("UNIT"));
  // log(1 - X - X^2) has coefficient -L_i/i with L_i the Lucas numbers, so
  // every index is invertible and the inverse exists at any order
  UnitSeries f = unit_from(Q, 8, {"-1", "-1"});
  CHECK(ev("(1 - X - X^2) INV") == ene_inverse(f).series());
}

TEST_CASE("builtins match the library constructions") {
  CHECK(ev("E(0)") == weierstrass_factor(0, 8, Q).series());
  CHECK(ev("E(2)") == weierstrass_factor(2, 8, Q).series());
  CHECK(ev("I(3)") == cyclotomic_like(3, 8, Q).series());
  CHECK(ev("AH(2)") == artin_hasse(2, 8, Q).series());
  CHECK(ev("KOEBE") == koebe(Q, 8));
  CHECK(ev("UNIT") == ev("1 - X"));
  CHECK(ev("ZERO") == ev("1"));
  CHECK(ev("E(2) @ E(3)") == ev("E(3)"));
}

TEST_CASE("exponential monomials") {
  ExpForm F(Q, 8);
  F.set_f(1, ring_one(Q));
  CHECK(ev("EXP(X)") == series_exp(F).series());
  ExpForm G(Q, 8);
  G.set_f(3, RingElem(Q, mpq_class(-2, 3)));
  CHECK(ev("EXP(-2/3*X^3)") == series_exp(G).series());
  CHECK(ev("EXP(-2/3 X^3)") == series_exp(G).series());
  CHECK(ev("EXP(-X)") == ev("EXP(-1*X)"));
  // an index beyond the order leaves only the constant term
  CHECK(ev("EXP(X^12)") == ev("ZERO"));
  // complex coefficient form
  ExpForm H(C, 6);
  H.set_f(2, RingElem(C, std::complex<double>(0.5, 1.0)));
  CHECK(ev("EXP([0.5, 1]*X^2)", 6, C) == series_exp(H).series());
}

TEST_CASE("postfix operators") {
  UnitSeries e = UnitSeries(ev("EXP(X)"));
  CHECK(ev("EXP(X) T(2)") == hecke(2, e).series());
  CHECK(ev("EXP(X) T(2)").order() == 4);
  CHECK(ev("(1 - X) D") == log_derivative(unit_from(Q, 8, {"-1"})));
  UnitSeries f = unit_from(Q, 8, {"1", "2", "3"});
  CHECK(ev("(1 + X + 2*X^2 + 3*X^3) Te(2)") == exp_truncate(f, 2).series());
  // postfix chains apply left to right
  CHECK(ev("EXP(X) Te(1) T(1)") == ev("EXP(X)"));
}

TEST_CASE("operator precedence") {
  // '@' binds tighter than '*'
  UnitSeries i1 = cyclotomic_like(1, 8, Q);
  UnitSeries i2 = cyclotomic_like(2, 8, Q);
  CHECK(ev("I(1) * I(2) @ I(2)") == mul(i1.series(), ene::ene(i2, i2).series()));
  // '^' binds tighter than '@'
  CHECK(ev("(1 - X) ^ 2 @ UNIT") == ev("1 - 2*X + X^2"));
  // postfix binds tighter than '^'
  CHECK(ev("EXP(X) T(2) ^ 2", 8) == fractional_power(hecke(2, UnitSeries(ev("EXP(X)"))),
                                                      from_int(Q, 2)).series());
  // parentheses override everything
  CHECK(ev("(I(1) * I(2)) @ I(2)") ==
        ene::ene(series_mul(i1, i2), i2).series());
}

TEST_CASE("division is spaced, rational coefficients are tight") {
  CHECK(ev("1/2*X + 1") == poly_extend(unit_from(Q, 1, {"1/2"}), 8).series());
  CHECK(ev("ZERO / I(1)") == geometric(Q, 8, ring_one(Q)));
  CHECK(ev("I(2) / I(1)") == mul(ev("I(2)"), series_invert(cyclotomic_like(1, 8, Q)).series()));
  // dividing by a series whose constant term is not 1 is rejected
  CHECK_THROWS_AS(ev("1 / 2"), ParseError);
}

TEST_CASE("fractional powers from the caret") {
  UnitSeries f = unit_from(Q, 8, {"1"});
  CHECK(ev("(1 + X) ^ 1/2") == fractional_power(f, RingElem(Q, mpq_class(1, 2))).series());
  CHECK(ev("(1 + X) ^ -2") == fractional_power(f, from_int(Q, -2)).series());
  CHECK(ev("(1 + X) ^ (1/2)") == ev("(1 + X) ^ 1/2"));
  CHECK(ev("(1 + X) ^ [2, 0]", 8, C) ==
        fractional_power(unit_from(C, 8, {"1"}), RingElem(C, std::complex<double>(2, 0))).series());
}

TEST_CASE("ring-dependent coefficient syntax") {
  CHECK(ev("1 + 2.5e-1*X", 4, C) ==
        poly_extend(UnitSeries(ev("1 + [0.25, 0]*X", 1, C)), 4).series());
  CHECK_THROWS_AS(ev("1 + 2.5e-1*X", 4, Q), ParseError);
  CHECK_THROWS_AS(ev("1 + [1, 2]*X", 4, Q), ParseError);
  Ring m7 = Ring::modular(7);
  CHECK(ev("1 + 9*X", 4, m7) == ev("1 + 2*X", 4, m7));
}

TEST_CASE("parse errors carry one-based columns") {
  CHECK(fail_column("1 +") == 4);
  CHECK(fail_column("(1 - X") == 1);
  CHECK(fail_column("Q(3)") == 1);
  CHECK(fail_column("1 + y") == 5);
  CHECK(fail_column("E(x)") == 3);
  CHECK(fail_column("1 ~ 2") == 3);
  // the '@' operands must be unit series
  CHECK(fail_column("KOEBE @ UNIT") == 7);
  // names that only start like an X literal are unknown identifiers
  CHECK(fail_column("1 + Xy") == 5);
}

TEST_CASE("errors beyond parsing keep their engine types") {
  CHECK_THROWS_AS(ev("E(2)", 8, Ring::integers()), NotQAlgebraError);
  CHECK_THROWS_AS(ev("EXP(X^2) INV"), NotInvertibleError);
}

TEST_CASE("order bound of the literals in a text") {
  CHECK(literal_order_bound("1 - X^7 + X^3") == 7);
  CHECK(literal_order_bound("1 - 2*X") == 1);
  CHECK(literal_order_bound("E(2) @ (1 - X^4)") == 4);
  CHECK(literal_order_bound("ZERO") == 1);
  CHECK(literal_order_bound("") == 1);
}

TEST_CASE("grammar text names every operator") {
  std::string g(kGrammarText);
  for (const char* tok : {"@", "INV", "T(n)", "Te(N)", "EXP", "KOEBE", "UNIT", "ZERO"})
    CHECK(g.find(tok) != std::string::npos);
}
