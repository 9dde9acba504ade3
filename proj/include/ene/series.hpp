#pragma once

#include <string>
#include <vector>

#include "ene/ring.hpp"

namespace ene {

// Truncated power series: coefficients c_0..c_N over one ring, exact up to
// and including X^N. Binary operations require equal rings and return the
// minimum of the operand orders.
class Series {
 public:
  Series(Ring r, int order);  // all coefficients zero
  Series(Ring r, int order, std::vector<RingElem> coeffs);

  const Ring& ring() const noexcept { return ring_; }
  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const RingElem& coeff(int k) const;
  void set_coeff(int k, RingElem v);

  // equal order, equal ring, coefficientwise ring equality
  friend bool operator==(const Series& a, const Series& b);
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

 private:
  Ring ring_;
  std::vector<RingElem> c_;
};

// Series with constant term 1: the underlying group of the ene product.
class UnitSeries {
 public:
  explicit UnitSeries(Series s);
  static UnitSeries one(const Ring& r, int order);

  const Series& series() const noexcept { return s_; }
  const Ring& ring() const noexcept { return s_.ring(); }
  int order() const noexcept { return s_.order(); }
  const RingElem& coeff(int k) const { return s_.coeff(k); }
  void set_coeff(int k, RingElem v);  // k >= 1 only

  friend bool operator==(const UnitSeries& a, const UnitSeries& b) { return a.s_ == b.s_; }
  friend bool operator!=(const UnitSeries& a, const UnitSeries& b) { return !(a == b); }

 private:
  Series s_;
};

// Exponential coordinates: f = exp(sum_{i=1..N} F_i X^i), stored as F_1..F_N.
// Only meaningful over Q-algebras.
class ExpForm {
 public:
  ExpForm(Ring r, int order);  // all zero
  ExpForm(Ring r, int order, std::vector<RingElem> f);  // f.size() == order

  const Ring& ring() const noexcept { return ring_; }
  int order() const noexcept { return static_cast<int>(f_.size()); }
  const RingElem& f(int i) const;  // 1-based
  void set_f(int i, RingElem v);

  friend bool operator==(const ExpForm& a, const ExpForm& b);
  friend bool operator!=(const ExpForm& a, const ExpForm& b) { return !(a == b); }

 private:
  Ring ring_;
  std::vector<RingElem> f_;
};

// plain truncated arithmetic
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series negate(const Series& a);
Series mul(const Series& a, const Series& b);
Series scalar_mul(const RingElem& c, const Series& a);

UnitSeries series_mul(const UnitSeries& a, const UnitSeries& b);
// inverse of a unit series; closed recursion, no ring division needed
UnitSeries series_invert(const UnitSeries& a);
UnitSeries series_div(const UnitSeries& a, const UnitSeries& b);

// log/exp pair between (1 + XA[[X]], *) and (XA[[X]], +); Q-algebras only
ExpForm series_log(const UnitSeries& f);
UnitSeries series_exp(const ExpForm& F);

// d/dX, order drops by one
Series derivative(const Series& a);
// f'/f for unit f, order N-1; division-free via f' * invert(f)
Series log_derivative(const UnitSeries& f);
// exp(X * logderiv(f)), order N
UnitSeries exp_log_derivative(const UnitSeries& f);

Series scale_argument(const Series& a, const RingElem& s);  // X -> sX
Series substitute_power(const Series& a, int k);            // X -> X^k, order kept
Series truncate(const Series& a, int M);          // M <= order: drop tail knowledge
UnitSeries truncate(const UnitSeries& a, int M);
// zero-extend to a higher order; only sound when a is an exact polynomial
UnitSeries poly_extend(const UnitSeries& a, int M);
// exp(T_M(log f)) at the full order of f; kills exponential data above M
UnitSeries exp_truncate(const UnitSeries& f, int M);

// coefficientwise product; unit is sum_{n>=0} X^n
Series hadamard(const Series& a, const Series& b);
// K0 = X/(1-X)^2 = sum n X^n, the hadamard unit on XA[[X]]
Series koebe(const Ring& r, int order);
// unit of hadamard on all of A[[X]]: sum_{n>=0} X^n
Series hadamard_one(const Ring& r, int order);

// embeddings between representations
Series to_series(const ExpForm& F);        // sum F_i X^i at the same order
ExpForm exp_form_of(const Series& a);      // requires a_0 == 0
Series derivative_of_log(const ExpForm& F);  // sum i F_i X^{i-1}, order N-1

// convenience for construction and tests
UnitSeries unit_from(const Ring& r, int order, const std::vector<std::string>& tail);
Series geometric(const Ring& r, int order, const RingElem& a);  // 1/(1-aX)

// largest k with c_k != 0, or 0 when the series is constant
int poly_degree(const Series& a);
int poly_degree(const UnitSeries& a);

// true when coefficients agree (ring equality) for all k <= M
bool agree_to_order(const Series& a, const Series& b, int M);
bool agree_to_order(const UnitSeries& a, const UnitSeries& b, int M);

// "1 - 3*X + 2*X^2 + O(X^3)" style display
std::string pretty(const Series& a);
std::string pretty(const UnitSeries& a);

}  // namespace ene
