#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <tuple>
#include <utility>

#include "ene/product.hpp"
#include "ene/transforms.hpp"

using namespace ene;

namespace {

const Ring Q = Ring::rationals();

RingElem qr(long num, long den = 1) { return RingElem(Q, mpq_class(num, den)); }

// exp of a dense log keeps every decimated image nontrivial
UnitSeries log_dense(int order, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 9);
  std::uniform_int_distribution<int> sign(0, 1);
  ExpForm F(Q, order);
  for (int i = 1; i <= order; ++i) F.set_f(i, qr(sign(rng) ? num(rng) : -num(rng), num(rng)));
  return series_exp(F);
}

}  // namespace

TEST_CASE("weierstrass factors") {
  Ring z = Ring::integers();
  CHECK(weierstrass_factor(0, 6, z) == unit_from(z, 6, {"-1"}));
  CHECK_THROWS_AS(weierstrass_factor(1, 6, z), NotQAlgebraError);

  // E_2 = (1-X) exp(X + X^2/2)
  ExpForm F(Q, 8);
  F.set_f(1, qr(1));
  F.set_f(2, qr(1, 2));
  UnitSeries want = series_mul(unit_from(Q, 8, {"-1"}), series_exp(F));
  CHECK(weierstrass_factor(2, 8, Q) == want);

  // log E_n = -sum_{k > n} X^k / k
  UnitSeries e3 = weierstrass_factor(3, 9, Q);
  ExpForm L = series_log(e3);
  for (int k = 1; k <= 3; ++k) CHECK(is_zero(L.f(k)));
  for (int k = 4; k <= 9; ++k) CHECK(L.f(k) == qr(-1, k));
}

TEST_CASE("products of weierstrass factors select the larger index") {
  for (int n : {1, 2, 4}) {
    for (int m : {1, 3}) {
      UnitSeries en = weierstrass_factor(n, 12, Q);
      UnitSeries em = weierstrass_factor(m, 12, Q);
      CHECK(ene::ene(en, em) == weierstrass_factor(std::max(n, m), 12, Q));
    }
  }
}

TEST_CASE("products of 1 - X^n pairs") {
  // (1 - X^n) against (1 - X^m) gives (1 - X^lcm)^gcd as an ordinary power;
  // over Z this exercises the universal path, so the order stays moderate
  Ring z = Ring::integers();
  for (auto [n, m] : {std::pair{2, 3}, {4, 6}, {3, 3}, {1, 5}}) {
    int g = std::gcd(n, m), l = n / g * m;
    UnitSeries in = cyclotomic_like(n, 16, z);
    UnitSeries im = cyclotomic_like(m, 16, z);
    UnitSeries want = UnitSeries::one(z, 16);
    for (int i = 0; i < g; ++i) want = series_mul(want, cyclotomic_like(l, 16, z));
    CHECK(ene::ene(in, im) == want);
  }
  // a larger common multiple over the rationals
  UnitSeries i4 = cyclotomic_like(4, 36, Q);
  UnitSeries i9 = cyclotomic_like(9, 36, Q);
  CHECK(ene::ene(i4, i9) == cyclotomic_like(36, 36, Q));
}

TEST_CASE("the 1 - X^n action keeps and scales divisible log indices") {
  std::mt19937_64 rng(601);
  UnitSeries f = log_dense(12, rng);
  for (int n : {1, 2, 3, 4}) {
    UnitSeries got = ene_by_IN(n, f);
    CHECK(got == ene::ene(cyclotomic_like(n, 12, Q), f));
    ExpForm F = series_log(f), G = series_log(got);
    for (int k = 1; k <= 12; ++k) {
      if (k % n == 0)
        CHECK(G.f(k) == int_scale(long(n), F.f(k)));
      else
        CHECK(is_zero(G.f(k)));
    }
  }
}

TEST_CASE("artin hasse exponential") {
  UnitSeries ah = artin_hasse(2, 8, Q);
  ExpForm L = series_log(ah);
  CHECK(L.f(1) == qr(1));
  CHECK(L.f(2) == qr(1, 2));
  CHECK(L.f(4) == qr(1, 4));
  CHECK(L.f(8) == qr(1, 8));
  for (int k : {3, 5, 6, 7}) CHECK(is_zero(L.f(k)));

  CHECK_THROWS_AS(artin_hasse(4, 8, Q), Error);
  CHECK_THROWS_AS(artin_hasse(1, 8, Q), Error);
  CHECK_THROWS_AS(artin_hasse(2, 8, Ring::integers()), NotQAlgebraError);
}

TEST_CASE("fractional powers through the exponential") {
  // (1 + X)^(1/2) starts 1 + X/2 - X^2/8 + X^3/16
  UnitSeries f = unit_from(Q, 3, {"1"});
  UnitSeries h = fractional_power(f, qr(1, 2));
  CHECK(h.coeff(1) == qr(1, 2));
  CHECK(h.coeff(2) == qr(-1, 8));
  CHECK(h.coeff(3) == qr(1, 16));

  // integer exponents match repeated multiplication
  std::mt19937_64 rng(602);
  UnitSeries g = log_dense(8, rng);
  CHECK(fractional_power(g, qr(3)) == series_mul(series_mul(g, g), g));
  // and the halves compose back
  CHECK(fractional_power(fractional_power(g, qr(1, 2)), qr(2)) == g);
}

TEST_CASE("decimation operator basics") {
  // T(2) exp(X^2) = exp(2X)
  ExpForm F(Q, 8);
  F.set_f(2, qr(1));
  UnitSeries got = hecke(2, series_exp(F));
  CHECK(got.order() == 4);
  ExpForm W(Q, 4);
  W.set_f(1, qr(2));
  CHECK(got == series_exp(W));

  CHECK_THROWS_AS(hecke(9, series_exp(F)), Error);  // floor(8/9) < 1
}

TEST_CASE("decimation operators compose multiplicatively") {
  std::mt19937_64 rng(603);
  UnitSeries f = log_dense(36, rng);
  for (auto [n, m] : {std::pair{2, 3}, {2, 2}, {3, 4}}) {
    CHECK(hecke(n, hecke(m, f)) == hecke(n * m, f));
    CHECK(hecke(n, hecke(m, f)) == hecke(m, hecke(n, f)));
  }
}

TEST_CASE("decimation factors through the 1 - X^n action and a dilatation") {
  std::mt19937_64 rng(604);
  UnitSeries f = log_dense(12, rng);
  for (int n : {2, 3, 4}) {
    FractionalSeries lifted = dilate(mpq_class(n), FractionalSeries(ene_by_IN(n, f)));
    CHECK(lifted.denom() == 1);
    CHECK(lifted.body() == hecke(n, f));
  }
}

TEST_CASE("dilatations form a group action") {
  std::mt19937_64 rng(605);
  FractionalSeries f(log_dense(12, rng));
  FractionalSeries a = dilate(mpq_class(2, 3), f);
  FractionalSeries b = dilate(mpq_class(3, 2), a);
  CHECK(b == f);
  CHECK(dilate(mpq_class(1), f) == f);
  // R_2 R_3 = R_6
  CHECK(dilate(mpq_class(2), dilate(mpq_class(3), f)) == dilate(mpq_class(6), f));

  // canonical form divides out common exponent support
  UnitSeries sq = UnitSeries::one(Q, 8);
  sq.set_coeff(2, qr(5));
  sq.set_coeff(4, qr(-1, 3));
  FractionalSeries c(2, sq);  // body lives in X^2, so this is an ordinary series
  CHECK(c.denom() == 1);
  CHECK(c.body().order() == 4);
  CHECK(c.body().coeff(1) == qr(5));
  CHECK(c.body().coeff(2) == qr(-1, 3));
}

TEST_CASE("decimation commutes with coprime dilatations") {
  // T(n) R_{p/q} = R_{p/q} T(n) needs gcd(n, q) = 1; X^(1/q) exponents
  // otherwise collide with the decimation lattice. The two routes can keep
  // different truncation orders when n does not divide the base order, so
  // the comparison runs on the common order.
  std::mt19937_64 rng(606);
  FractionalSeries f(log_dense(24, rng));
  for (auto [n, num, den] : {std::tuple{2, 3, 5}, {3, 5, 2}, {5, 7, 3}}) {
    REQUIRE(std::gcd(n, den) == 1);
    mpq_class lam(num, den);
    FractionalSeries a = hecke(n, dilate(lam, f));
    FractionalSeries b = dilate(lam, hecke(n, f));
    CHECK(a.denom() == b.denom());
    CHECK(agree_to_order(a.body(), b.body(), std::min(a.body().order(), b.body().order())));
  }
  // with a dividing index the bookkeeping matches exactly
  CHECK(hecke(2, dilate(mpq_class(3, 5), f)) == dilate(mpq_class(3, 5), hecke(2, f)));
}

TEST_CASE("convolution kernel represents the coefficient-shift character") {
  UnitSeries k = convolution_kernel(Q, 10);
  // log of exp(-X/(1-X)) has every coefficient -1
  ExpForm L = series_log(k);
  for (int i = 1; i <= 10; ++i) CHECK(L.f(i) == qr(-1));

  std::mt19937_64 rng(607);
  UnitSeries f = log_dense(10, rng);
  CHECK(convolution_check(f) == exp_log_derivative(f));
  CHECK(ene::ene(k, f) == exp_log_derivative(f));
}

TEST_CASE("membership predicates on log support") {
  ExpForm F(Q, 10);
  F.set_f(1, qr(3));
  F.set_f(2, qr(-1, 2));
  UnitSeries f = series_exp(F);  // log support {1, 2}
  CHECK(in_subring_AN(f, 2));
  CHECK(in_subring_AN(f, 5));
  CHECK_FALSE(in_subring_AN(f, 1));
  CHECK(in_ideal_Jn(f, 3));
  CHECK_FALSE(in_ideal_Jn(f, 2));
  CHECK_THROWS_AS(in_subring_AN(f, 10), Error);  // verdict needs order > n

  // members of the depth-n subring are annihilated by E_n
  UnitSeries en = weierstrass_factor(2, 10, Q);
  CHECK(ene::ene(en, f) == UnitSeries::one(Q, 10));
}

TEST_CASE("substituting powers exchanges through decimations") {
  // f(X^k) (*) g(X^l) = (T(l) f (*) T(k) g)(X^(kl))
  std::mt19937_64 rng(608);
  const int order = 12, k = 2, l = 3;
  UnitSeries f = log_dense(order, rng);
  UnitSeries g = log_dense(order, rng);
  UnitSeries lhs = ene::ene(UnitSeries(substitute_power(f.series(), k)),
                            UnitSeries(substitute_power(g.series(), l)));
  UnitSeries inner = ene::ene(hecke(l, f), hecke(k, g));  // order floor(12/3) then min
  UnitSeries rhs = UnitSeries::one(Q, order);
  for (int i = 1; i * k * l <= order; ++i) rhs.set_coeff(i * k * l, inner.coeff(i));
  CHECK(lhs == rhs);
}
