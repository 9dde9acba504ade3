#include "ene/transforms.hpp"

#include <numeric>

#include "ene/errors.hpp"
#include "ene/product.hpp"

namespace ene {

namespace {

// gcd of denom and the exponent support of body; denom when body is constant
long reduction_gcd(long denom, const UnitSeries& body) {
  long g = denom;
  for (int k = 1; k <= body.order() && g > 1; ++k) {
    if (!is_zero(body.coeff(k))) g = std::gcd(g, static_cast<long>(k));
  }
  return g;
}

UnitSeries decimate_exponents(const UnitSeries& body, long g) {
  Series out(body.ring(), static_cast<int>(body.order() / g));
  for (int k = 0; k <= out.order(); ++k) out.set_coeff(k, body.coeff(static_cast<int>(g * k)));
  return UnitSeries(std::move(out));
}

UnitSeries stretch_exponents(const UnitSeries& body, long q) {
  if (static_cast<long long>(body.order()) * q > 100000)
    throw Error("dilate: stretched order too large");
  Series out(body.ring(), static_cast<int>(body.order() * q));
  for (int k = 0; k <= body.order(); ++k) out.set_coeff(static_cast<int>(q * k), body.coeff(k));
  return UnitSeries(std::move(out));
}

}  // namespace

FractionalSeries::FractionalSeries(UnitSeries body) : denom_(1), body_(std::move(body)) {}

FractionalSeries::FractionalSeries(long denom, UnitSeries body)
    : denom_(denom), body_(std::move(body)) {
  if (denom_ < 1) throw Error("FractionalSeries: denom must be positive");
  long g = reduction_gcd(denom_, body_);
  if (g > 1) {
    body_ = decimate_exponents(body_, g);
    denom_ /= g;
  }
}

UnitSeries weierstrass_factor(int n, int order, const Ring& r) {
  if (n < 0) throw Error("weierstrass_factor: index must be nonnegative");
  if (order < 0) throw Error("weierstrass_factor: negative order");
  if (n == 0) {
    UnitSeries e = UnitSeries::one(r, order);
    if (order >= 1) e.set_coeff(1, ring_neg(ring_one(r)));
    return e;
  }
  if (!r.is_q_algebra()) throw NotQAlgebraError("weierstrass_factor");
  ExpForm F(r, order);
  for (int k = n + 1; k <= order; ++k) F.set_f(k, from_rational(r, mpq_class(-1, k)));
  return series_exp(F);
}

UnitSeries cyclotomic_like(int n, int order, const Ring& r) {
  if (n < 1) throw Error("cyclotomic_like: index must be positive");
  if (order < 0) throw Error("cyclotomic_like: negative order");
  UnitSeries f = UnitSeries::one(r, order);
  if (n <= order) f.set_coeff(n, ring_neg(ring_one(r)));
  return f;
}

UnitSeries ene_by_IN(int n, const UnitSeries& f) {
  if (n < 1) throw Error("ene_by_IN: index must be positive");
  if (!f.ring().is_q_algebra()) throw NotQAlgebraError("ene_by_IN");
  ExpForm F = series_log(f);
  ExpForm H(f.ring(), f.order());
  for (int k = n; k <= f.order(); k += n) H.set_f(k, int_scale(n, F.f(k)));
  return series_exp(H);
}

UnitSeries artin_hasse(long p, int order, const Ring& r) {
  if (p < 2) throw Error("artin_hasse: p must be prime");
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw Error("artin_hasse: p must be prime");
  if (!r.is_q_algebra()) throw NotQAlgebraError("artin_hasse");
  ExpForm F(r, order);
  mpz_class pw = 1;
  while (pw <= order) {
    F.set_f(static_cast<int>(pw.get_si()), from_rational(r, mpq_class(1) / mpq_class(pw)));
    pw *= p;
  }
  return series_exp(F);
}

UnitSeries fractional_power(const UnitSeries& f, const RingElem& a) {
  if (!f.ring().is_q_algebra()) throw NotQAlgebraError("fractional_power");
  if (a.ring() != f.ring()) throw RingMismatchError("fractional_power");
  ExpForm F = series_log(f);
  ExpForm G(f.ring(), f.order());
  for (int i = 1; i <= f.order(); ++i) G.set_f(i, ring_mul(a, F.f(i)));
  return series_exp(G);
}

UnitSeries hecke(int n, const UnitSeries& f) {
  if (n < 1) throw Error("hecke: index must be positive");
  if (!f.ring().is_q_algebra()) throw NotQAlgebraError("hecke");
  int m = f.order() / n;
  if (m < 1) throw Error("hecke: order too small for the decimation step");
  ExpForm F = series_log(f);
  ExpForm G(f.ring(), m);
  for (int k = 1; k <= m; ++k) G.set_f(k, int_scale(n, F.f(n * k)));
  return series_exp(G);
}

FractionalSeries hecke(int n, const FractionalSeries& f) {
  return FractionalSeries(f.denom(), hecke(n, f.body()));
}

FractionalSeries dilate(const mpq_class& lambda, const FractionalSeries& f) {
  mpq_class lam = lambda;
  lam.canonicalize();
  if (lam <= 0) throw Error("dilate: lambda must be positive");
  if (!lam.get_num().fits_slong_p() || !lam.get_den().fits_slong_p())
    throw Error("dilate: lambda out of range");
  long p = lam.get_num().get_si();
  long q = lam.get_den().get_si();
  if (f.denom() > (1L << 30) / p) throw Error("dilate: denominator overflow");
  UnitSeries body = q == 1 ? f.body() : stretch_exponents(f.body(), q);
  return FractionalSeries(f.denom() * p, std::move(body));
}

UnitSeries convolution_kernel(const Ring& r, int order) {
  if (!r.is_q_algebra()) throw NotQAlgebraError("convolution_kernel");
  ExpForm F(r, order);
  RingElem minus_one = ring_neg(ring_one(r));
  for (int k = 1; k <= order; ++k) F.set_f(k, minus_one);
  return series_exp(F);
}

UnitSeries convolution_check(const UnitSeries& f) {
  UnitSeries lhs = ene(convolution_kernel(f.ring(), f.order()), f);
  UnitSeries rhs = exp_log_derivative(f);
  if (lhs != rhs)
    throw Error("convolution_check: kernel product disagrees with exp of X*logderiv");
  return lhs;
}

bool in_subring_AN(const UnitSeries& f, int n) {
  if (n < 1) throw Error("in_subring_AN: index must be positive");
  if (!f.ring().is_q_algebra()) throw NotQAlgebraError("in_subring_AN");
  if (f.order() < n + 1) throw Error("in_subring_AN: order must exceed the index");
  ExpForm F = series_log(f);
  for (int i = n + 1; i <= f.order(); ++i)
    if (!is_zero(F.f(i))) return false;
  return true;
}

bool in_ideal_Jn(const UnitSeries& f, int n) {
  if (n < 1) throw Error("in_ideal_Jn: index must be positive");
  if (!f.ring().is_q_algebra()) throw NotQAlgebraError("in_ideal_Jn");
  if (f.order() < n) throw Error("in_ideal_Jn: order below the index");
  return is_zero(series_log(f).f(n));
}

}  // namespace ene
