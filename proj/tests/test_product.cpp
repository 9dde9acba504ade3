#include "doctest.h"

#include <random>
#include <vector>

#include "ene/matrix.hpp"
#include "ene/product.hpp"

using namespace ene;

namespace {

const Ring Q = Ring::rationals();

RingElem qr(long num, long den = 1) { return RingElem(Q, mpq_class(num, den)); }

UnitSeries random_unit(const Ring& r, int order, std::mt19937_64& rng, long hi = 9) {
  std::uniform_int_distribution<long> num(-hi, hi);
  std::uniform_int_distribution<long> den(1, 9);
  UnitSeries u = UnitSeries::one(r, order);
  for (int k = 1; k <= order; ++k) {
    if (r.kind() == RingKind::BigRational)
      u.set_coeff(k, RingElem(r, mpq_class(num(rng), den(rng))));
    else
      u.set_coeff(k, from_int(r, num(rng)));
  }
  return u;
}

}  // namespace

TEST_CASE("two linear factors multiply their roots") {
  // roots 1/2 and 1/3, product root 1/6
  UnitSeries f = unit_from(Q, 4, {"-2"});
  UnitSeries g = unit_from(Q, 4, {"-3"});
  UnitSeries want = unit_from(Q, 4, {"-6"});
  CHECK(ene_exp(f, g) == want);
  CHECK(ene_universal(f, g) == want);
  CHECK(ene_tensor(f, g, 4) == want);
  CHECK(ene_roots(Q, {qr(1, 2)}, {qr(1, 3)}, 4) == want);
  CHECK(ene::ene(f, g) == want);
}

TEST_CASE("root lists expand to the expected quadratic") {
  // alphas {1, 1/2}, betas {1/3}: products {1/3, 1/6}, (1-3X)(1-6X)
  UnitSeries got = ene_roots(Q, {qr(1), qr(1, 2)}, {qr(1, 3)}, 5);
  CHECK(got == unit_from(Q, 5, {"-9", "18"}));
  // a non-invertible product over Z is rejected
  Ring z = Ring::integers();
  CHECK_THROWS_AS(ene_roots(z, {from_int(z, 2)}, {from_int(z, 1)}, 3), NotInvertibleError);
}

TEST_CASE("the unit and the zero of the second operation") {
  std::mt19937_64 rng(401);
  UnitSeries f = random_unit(Q, 10, rng);
  UnitSeries unit = unit_from(Q, 10, {"-1"});      // 1 - X
  UnitSeries zero = UnitSeries::one(Q, 10);        // 1
  CHECK(ene::ene(f, unit) == f);
  CHECK(ene::ene(unit, f) == f);
  CHECK(ene::ene(f, zero) == zero);
}

TEST_CASE("both closed-form paths agree on random series") {
  std::mt19937_64 rng(402);
  for (int t = 0; t < 12; ++t) {
    UnitSeries f = random_unit(Q, 10, rng);
    UnitSeries g = random_unit(Q, 10, rng);
    UnitSeries e = ene_exp(f, g);
    CHECK(ene_universal(f, g) == e);
    CHECK(ene::ene(f, g) == e);  // dispatch picks the exponential path here
  }
}

TEST_CASE("tensor path agrees on polynomial inputs") {
  std::mt19937_64 rng(403);
  for (int t = 0; t < 6; ++t) {
    UnitSeries f = poly_extend(random_unit(Q, 3, rng, 4), 9);
    UnitSeries g = poly_extend(random_unit(Q, 3, rng, 4), 9);
    CHECK(ene_tensor(f, g, 9) == ene_exp(f, g));
  }
}

TEST_CASE("the integer result embeds the rational computation") {
  std::mt19937_64 rng(404);
  Ring z = Ring::integers();
  for (int t = 0; t < 8; ++t) {
    UnitSeries fz = random_unit(z, 8, rng);
    UnitSeries gz = random_unit(z, 8, rng);
    UnitSeries fq = UnitSeries::one(Q, 8), gq = UnitSeries::one(Q, 8);
    for (int k = 1; k <= 8; ++k) {
      fq.set_coeff(k, RingElem(Q, mpq_class(fz.coeff(k).whole())));
      gq.set_coeff(k, RingElem(Q, mpq_class(gz.coeff(k).whole())));
    }
    UnitSeries hz = ene::ene(fz, gz);  // universal path, no division
    UnitSeries hq = ene::ene(fq, gq);
    for (int k = 1; k <= 8; ++k) {
      const mpq_class& c = hq.coeff(k).rat();
      REQUIRE(c.get_den() == 1);
      CHECK(hz.coeff(k).whole() == c.get_num());
    }
  }
}

TEST_CASE("product of 1 + X with itself over Z/6") {
  // over Q the roots are both -1, the product root is 1, so the result is
  // 1 - X; over Z/6 that reduces to 1 + 5X with every later coefficient 0
  Ring m6 = Ring::modular(6);
  UnitSeries f = unit_from(m6, 8, {"1"});
  UnitSeries h = ene::ene(f, f);
  CHECK(h.coeff(1) == RingElem(m6, std::uint64_t(5)));
  for (int k = 2; k <= 8; ++k) CHECK(is_zero(h.coeff(k)));
}

TEST_CASE("distributivity over multiplication holds in a ring with zero divisors") {
  Ring m6 = Ring::modular(6);
  std::mt19937_64 rng(405);
  std::uniform_int_distribution<std::uint64_t> u(0, 5);
  for (int t = 0; t < 6; ++t) {
    UnitSeries f = UnitSeries::one(m6, 8), g = UnitSeries::one(m6, 8),
               h = UnitSeries::one(m6, 8);
    for (int k = 1; k <= 8; ++k) {
      f.set_coeff(k, RingElem(m6, u(rng)));
      g.set_coeff(k, RingElem(m6, u(rng)));
      h.set_coeff(k, RingElem(m6, u(rng)));
    }
    CHECK(ene::ene(f, series_mul(g, h)) == series_mul(ene::ene(f, g), ene::ene(f, h)));
    CHECK(ene::ene(f, g) == ene::ene(g, f));
  }
}

TEST_CASE("ene_pow stacks products") {
  std::mt19937_64 rng(406);
  UnitSeries f = random_unit(Q, 8, rng);
  CHECK(ene_pow(f, 0) == unit_from(Q, 8, {"-1"}));
  CHECK(ene_pow(f, 1) == f);
  CHECK(ene_pow(f, 2) == ene::ene(f, f));
  CHECK(ene_pow(f, 3) == ene::ene(f, ene::ene(f, f)));

  Ring z = Ring::integers();
  UnitSeries fz = random_unit(z, 6, rng);
  CHECK(ene_pow(fz, 3) == ene::ene(fz, ene::ene(fz, fz)));
}

TEST_CASE("inverse under the second operation") {
  std::mt19937_64 rng(407);
  UnitSeries unit = unit_from(Q, 8, {"-1"});
  for (int t = 0; t < 8; ++t) {
    // exp of nonzero coefficients keeps every log index invertible
    ExpForm F(Q, 8);
    std::uniform_int_distribution<long> num(1, 9);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int i = 1; i <= 8; ++i) F.set_f(i, qr(sign(rng) ? num(rng) : -num(rng), num(rng)));
    UnitSeries f = series_exp(F);
    UnitSeries g = ene_inverse(f);
    CHECK(ene::ene(g, f) == unit);
    CHECK(ene::ene(f, g) == unit);
  }
}

TEST_CASE("a vanishing log coefficient blocks inversion and flags a zero divisor") {
  // exp(X^2): the first log coefficient is 0
  ExpForm F(Q, 6);
  F.set_f(2, qr(1));
  UnitSeries f = series_exp(F);
  ZeroDivisorVerdict v = is_zero_divisor(f);
  CHECK(v.zero_divisor);
  CHECK(v.witness == 1);
  try {
    ene_inverse(f);
    FAIL("expected NotInvertibleError");
  } catch (const NotInvertibleError& e) {
    CHECK(e.index == 1);
  }

  // exp(X + X^2 + ... + X^k) truncated one order higher: witness k + 1
  for (int k = 1; k <= 4; ++k) {
    ExpForm G(Q, k + 1);
    for (int i = 1; i <= k; ++i) G.set_f(i, qr(1));
    ZeroDivisorVerdict w = is_zero_divisor(series_exp(G));
    CHECK(w.zero_divisor);
    CHECK(w.witness == k + 1);
  }

  // fully dense log: no zero divisor up to the order
  ExpForm H(Q, 6);
  for (int i = 1; i <= 6; ++i) H.set_f(i, qr(i));
  CHECK_FALSE(is_zero_divisor(series_exp(H)).zero_divisor);
}

TEST_CASE("complex coefficients go through the exponential path") {
  Ring c = Ring::complexes();
  std::mt19937_64 rng(408);
  std::uniform_real_distribution<double> d(-0.4, 0.4);
  UnitSeries f = UnitSeries::one(c, 8), g = UnitSeries::one(c, 8);
  for (int k = 1; k <= 8; ++k) {
    f.set_coeff(k, RingElem(c, std::complex<double>(d(rng), d(rng))));
    g.set_coeff(k, RingElem(c, std::complex<double>(d(rng), d(rng))));
  }
  UnitSeries h = ene::ene(f, g);
  CHECK(h == ene_exp(f, g));
  CHECK(h == ene::ene(g, f));
}
