#include "ene/rational.hpp"

#include "ene/errors.hpp"
#include "ene/product.hpp"

namespace ene {

namespace {

void check_poly(const char* what, const UnitSeries& f, int deg) {
  if (deg < 0) throw Error(std::string(what) + ": negative degree");
  if (deg > f.order()) throw Error(std::string(what) + ": degree exceeds stored order");
  for (int k = deg + 1; k <= f.order(); ++k)
    if (!is_zero(f.coeff(k)))
      throw Error(std::string(what) + ": nonzero coefficient beyond the declared degree");
}

// re-embed an exact polynomial of known degree at a possibly different order
UnitSeries at_order(const UnitSeries& f, int deg, int order) {
  return poly_extend(truncate(f, deg), order < deg ? deg : order);
}

// ene product of exact polynomials, computed at the exact product degree
UnitSeries ene_poly(const UnitSeries& f, int df, const UnitSeries& g, int dg) {
  int d = df * dg;
  return ene(at_order(f, df, d), at_order(g, dg, d));
}

}  // namespace

RationalPair::RationalPair(UnitSeries num, UnitSeries den)
    : RationalPair(num, poly_degree(num), den, poly_degree(den)) {}

RationalPair::RationalPair(UnitSeries num, int num_degree, UnitSeries den, int den_degree)
    : num_(std::move(num)), den_(std::move(den)), num_deg_(num_degree), den_deg_(den_degree) {
  if (num_.ring() != den_.ring()) throw RingMismatchError("RationalPair");
  check_poly("RationalPair num", num_, num_deg_);
  check_poly("RationalPair den", den_, den_deg_);
}

bool operator==(const RationalPair& a, const RationalPair& b) {
  return a.num_deg_ == b.num_deg_ && a.den_deg_ == b.den_deg_ && a.num_ == b.num_ &&
         a.den_ == b.den_;
}

RationalPair ene_rational(const RationalPair& r1, const RationalPair& r2, int order) {
  if (r1.ring() != r2.ring()) throw RingMismatchError("ene_rational");
  int p1 = r1.num_degree(), q1 = r1.den_degree();
  int p2 = r2.num_degree(), q2 = r2.den_degree();

  UnitSeries pp = ene_poly(r1.num(), p1, r2.num(), p2);
  UnitSeries qq = ene_poly(r1.den(), q1, r2.den(), q2);
  UnitSeries pq = ene_poly(r1.num(), p1, r2.den(), q2);
  UnitSeries qp = ene_poly(r1.den(), q1, r2.num(), p2);

  int num_deg = p1 * p2 + q1 * q2;
  int den_deg = p1 * q2 + q1 * p2;
  int keep = order > num_deg ? order : num_deg;
  keep = keep > den_deg ? keep : den_deg;
  UnitSeries num = series_mul(at_order(pp, p1 * p2, keep), at_order(qq, q1 * q2, keep));
  UnitSeries den = series_mul(at_order(pq, p1 * q2, keep), at_order(qp, q1 * p2, keep));

  // with one factor a pure polynomial (or pure reciprocal) the degree of the
  // result is multiplicative; in the mixed case only the structural degrees
  // num_deg/den_deg are meaningful
  if ((std::min(p1, q1) == 0 || std::min(p2, q2) == 0) &&
      std::max(num_deg, den_deg) != r1.degree() * r2.degree())
    throw Error("ene_rational: degree bookkeeping failed");

  return RationalPair(std::move(num), num_deg, std::move(den), den_deg);
}

ShiftedPoly::ShiftedPoly(int shift, UnitSeries unit_part)
    : ShiftedPoly(shift, unit_part, poly_degree(unit_part)) {}

ShiftedPoly::ShiftedPoly(int shift, UnitSeries unit_part, int unit_degree)
    : shift_(shift), unit_(std::move(unit_part)), unit_deg_(unit_degree) {
  if (shift_ < 0) throw Error("ShiftedPoly: negative shift");
  check_poly("ShiftedPoly unit_part", unit_, unit_deg_);
}

bool operator==(const ShiftedPoly& a, const ShiftedPoly& b) {
  return a.shift_ == b.shift_ && a.unit_deg_ == b.unit_deg_ && a.unit_ == b.unit_;
}

ShiftedPoly ene_shifted(const ShiftedPoly& p, const ShiftedPoly& q) {
  if (p.ring() != q.ring()) throw RingMismatchError("ene_shifted");
  int n = p.shift(), m = q.shift();
  int dp = p.unit_degree(), dq = q.unit_degree();
  UnitSeries unit = ene_poly(p.unit_part(), dp, q.unit_part(), dq);
  return ShiftedPoly(n * dq + m * dp + n * m, std::move(unit), dp * dq);
}

UnitSeries reverse_poly(const UnitSeries& p) {
  int d = poly_degree(p);
  if (!ring_equal(p.coeff(d), ring_one(p.ring())))
    throw Error("reverse_poly: leading coefficient must be 1");
  Series out(p.ring(), p.order());
  for (int k = 0; k <= d; ++k) out.set_coeff(k, p.coeff(d - k));
  return UnitSeries(std::move(out));
}

bool verify_inversion(const UnitSeries& p, const UnitSeries& q) {
  if (p.ring() != q.ring()) throw RingMismatchError("verify_inversion");
  int dp = poly_degree(p), dq = poly_degree(q);
  UnitSeries lhs =
      ene_shifted(ShiftedPoly(0, reverse_poly(p), dp), ShiftedPoly(0, reverse_poly(q), dq))
          .unit_part();

  UnitSeries prod = ene_shifted(ShiftedPoly(0, p, dp), ShiftedPoly(0, q, dq)).unit_part();
  int d = dp * dq;
  auto lead_inv = try_invert(prod.coeff(d));
  if (!lead_inv) throw NotInvertibleError("verify_inversion", d);
  Series rhs(p.ring(), d);
  for (int k = 0; k <= d; ++k) rhs.set_coeff(k, ring_mul(*lead_inv, prod.coeff(d - k)));
  return lhs == UnitSeries(std::move(rhs));
}

}  // namespace ene
