#pragma once

#include "ene/qpoly.hpp"
#include "ene/series.hpp"

namespace ene {

// The ene product in exponential coordinates: log both factors, multiply
// termwise with weight -i, exponentiate. Q-algebras only, O(N^2) ring ops.
UnitSeries ene_exp(const UnitSeries& f, const UnitSeries& g);

// The ene product over any commutative ring: c_n = (-1)^n Q_n(a, b) with the
// cached universal polynomials acting through int_scale.
UnitSeries ene_universal(const UnitSeries& f, const UnitSeries& g);

// Dispatch: exponential path on Q-algebras, universal path elsewhere.
UnitSeries ene(const UnitSeries& f, const UnitSeries& g);

// Product of linear factors prod_{i,j} (1 - X/(alpha_i beta_j)) for exact
// root lists; every alpha_i beta_j must be invertible in the ring.
UnitSeries ene_roots(const Ring& r, const std::vector<RingElem>& alphas,
                     const std::vector<RingElem>& betas, int order);

// n-fold ene power; n = 0 gives the ene unit 1 - X. Termwise
// (-1)^(n-1) i^(n-1) F_i^n over Q-algebras, repeated products elsewhere.
UnitSeries ene_pow(const UnitSeries& f, int n);

// Ene-multiplicative inverse: G_i = F_i^{-1} / i^2. Errors carry the first
// non-invertible log coefficient index.
UnitSeries ene_inverse(const UnitSeries& f);

struct ZeroDivisorVerdict {
  bool zero_divisor = false;
  int witness = 0;  // smallest i with F_i zero or a zero divisor, when found
};

// Detects ene-ring zero divisors up to the truncation order via the
// componentwise criterion on log coefficients. Q-algebras only.
ZeroDivisorVerdict is_zero_divisor(const UnitSeries& f);

}  // namespace ene
