#pragma once

#include <gmpxx.h>

#include "ene/series.hpp"

namespace ene {

// Series in a fractional variable: the value is body(X^(1/denom)).
// Stored canonically: denom is reduced by the gcd of the exponent support,
// so denom == 1 exactly when the value is an ordinary series in X.
class FractionalSeries {
 public:
  explicit FractionalSeries(UnitSeries body);        // denom 1
  FractionalSeries(long denom, UnitSeries body);     // canonicalizes

  long denom() const noexcept { return denom_; }
  const UnitSeries& body() const noexcept { return body_; }

  friend bool operator==(const FractionalSeries& a, const FractionalSeries& b) {
    return a.denom_ == b.denom_ && a.body_ == b.body_;
  }
  friend bool operator!=(const FractionalSeries& a, const FractionalSeries& b) {
    return !(a == b);
  }

 private:
  long denom_;
  UnitSeries body_;
};

// E_n = (1-X) exp(X + X^2/2 + ... + X^n/n) = exp(-sum_{k>n} X^k/k),
// truncated at `order`. E_0 = 1-X works over any ring; n >= 1 needs a
// Q-algebra.
UnitSeries weierstrass_factor(int n, int order, const Ring& r);

// I_n = 1 - X^n (any ring)
UnitSeries cyclotomic_like(int n, int order, const Ring& r);

// I_n (*) f = exp(n * sum_k F_{nk} X^{nk}): keeps exponential indices
// divisible by n, scaled by n. Matches ene(cyclotomic_like(n), f).
UnitSeries ene_by_IN(int n, const UnitSeries& f);

// exp(sum_{k>=0} X^(p^k) / p^k) truncated; p must be prime
UnitSeries artin_hasse(long p, int order, const Ring& r);

// f^a = exp(a log f); binomial series for f = 1+X
UnitSeries fractional_power(const UnitSeries& f, const RingElem& a);

// Hecke operator T(n): exp(sum_k n F_{nk} X^k). Output order is
// floor(order/n), which must be >= 1. Satisfies T(n) = R_n(I_n (*) f) and
// T(n)T(m) = T(nm).
UnitSeries hecke(int n, const UnitSeries& f);
// same operator in the fractional variable (acts on the body)
FractionalSeries hecke(int n, const FractionalSeries& f);

// Dilatation R_lambda: value f(X^(1/lambda)) for positive rational lambda.
// R_lambda R_mu = R_{lambda mu}; R_1 is the identity.
FractionalSeries dilate(const mpq_class& lambda, const FractionalSeries& f);

// exp(-X/(1-X)), the left factor of the convolution identity
UnitSeries convolution_kernel(const Ring& r, int order);

// Returns ene(convolution_kernel, f) after asserting it equals
// exp_log_derivative(f); a mismatch throws (engine bug, not user error).
UnitSeries convolution_check(const UnitSeries& f);

// true iff log f has no terms of index i with n < i <= order; needs
// order >= n+1 for a meaningful verdict (verdicts are at truncation order)
bool in_subring_AN(const UnitSeries& f, int n);

// true iff the n-th coefficient of log f vanishes; needs order >= n
bool in_ideal_Jn(const UnitSeries& f, int n);

}  // namespace ene
