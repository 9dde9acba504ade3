#pragma once

#include <vector>

#include "ene/series.hpp"

namespace ene {

// Dense square matrix over a ring; row-major storage.
class RingMatrix {
 public:
  RingMatrix(Ring r, int dim);  // zero matrix
  static RingMatrix identity(const Ring& r, int dim);

  const Ring& ring() const noexcept { return ring_; }
  int dim() const noexcept { return dim_; }
  const RingElem& at(int i, int j) const;
  void set(int i, int j, RingElem v);

 private:
  Ring ring_;
  int dim_;
  std::vector<RingElem> a_;
};

RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b);
RingElem trace(const RingMatrix& m);

// Companion matrix of a unit polynomial P = 1 + a_1 X + ... + a_d X^d with
// a_d != 0: subdiagonal of ones, last column -a_d, ..., -a_1, so that
// det(I - M_P X) = P(X).
RingMatrix companion_matrix(const UnitSeries& P);

// Standard Kronecker product: (M (x) N)(x (x) y) = (Mx) (x) (Ny).
RingMatrix kronecker(const RingMatrix& m, const RingMatrix& n);

// det(I - MX) embedded at order N. Division-free (Berkowitz) over any ring;
// over Q-algebras the trace-exponential route is also computed and the two
// must agree, else an Error is raised.
UnitSeries det_series(const RingMatrix& m, int order);

// P * Q through det(I - (M_P (x) M_Q) X); degree-zero inputs short-circuit
// to the ene zero 1.
UnitSeries ene_tensor(const UnitSeries& P, const UnitSeries& Q, int order);

}  // namespace ene
