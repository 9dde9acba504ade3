#pragma once

#include "ene/series.hpp"

namespace ene {

// Rational function num/den with both parts polynomials in 1+XA[X].
// Degrees are stored explicitly (structural degrees from the construction),
// since a leading coefficient can vanish over a non-domain ring while the
// degree bookkeeping must survive.
class RationalPair {
 public:
  RationalPair(UnitSeries num, UnitSeries den);  // degrees read off the data
  RationalPair(UnitSeries num, int num_degree, UnitSeries den, int den_degree);

  const UnitSeries& num() const noexcept { return num_; }
  const UnitSeries& den() const noexcept { return den_; }
  int num_degree() const noexcept { return num_deg_; }
  int den_degree() const noexcept { return den_deg_; }
  int degree() const noexcept { return num_deg_ > den_deg_ ? num_deg_ : den_deg_; }
  const Ring& ring() const noexcept { return num_.ring(); }

  friend bool operator==(const RationalPair& a, const RationalPair& b);
  friend bool operator!=(const RationalPair& a, const RationalPair& b) { return !(a == b); }

 private:
  UnitSeries num_;
  UnitSeries den_;
  int num_deg_;
  int den_deg_;
};

// (P1/Q1) (*) (P2/Q2) = (P1*P2)(Q1*Q2) / ((P1*Q2)(Q1*P2)) with (*) the ene
// product on the four polynomial pairs. No cancellation is performed. The
// result is exact; parts are stored at order >= `order` for comparisons.
RationalPair ene_rational(const RationalPair& r1, const RationalPair& r2, int order);

// X^shift * unit_part(X) with unit_part in 1+XA[X]; the scalar-free
// normal form for polynomials with a zero at the origin.
class ShiftedPoly {
 public:
  ShiftedPoly(int shift, UnitSeries unit_part);  // degree read off the data
  ShiftedPoly(int shift, UnitSeries unit_part, int unit_degree);

  int shift() const noexcept { return shift_; }
  const UnitSeries& unit_part() const noexcept { return unit_; }
  int unit_degree() const noexcept { return unit_deg_; }
  int degree() const noexcept { return shift_ + unit_deg_; }
  const Ring& ring() const noexcept { return unit_.ring(); }

  friend bool operator==(const ShiftedPoly& a, const ShiftedPoly& b);
  friend bool operator!=(const ShiftedPoly& a, const ShiftedPoly& b) { return !(a == b); }

 private:
  int shift_;
  UnitSeries unit_;
  int unit_deg_;
};

// (X^n P0) (*) (X^m Q0) = X^{n deg Q0 + m deg P0 + nm} (P0 (*) Q0)
ShiftedPoly ene_shifted(const ShiftedPoly& p, const ShiftedPoly& q);

// coefficient reversal X^deg * P(1/X); both extreme coefficients must be 1,
// so the roots map to their inverses and the result is again monic-at-0
UnitSeries reverse_poly(const UnitSeries& p);

// checks reverse(P) (*) reverse(Q) == reversal of P (*) Q, the inversion
// invariance of the product. The right side is reversed at the structural
// degree deg(P)deg(Q) and renormalized to lower coefficient 1 (the leading
// coefficient of P (*) Q is a unit, +-1 for extremes-1 inputs).
bool verify_inversion(const UnitSeries& p, const UnitSeries& q);

}  // namespace ene
