#include "ene/matrix.hpp"

namespace ene {

RingMatrix::RingMatrix(Ring r, int dim) : ring_(std::move(r)), dim_(dim) {
  if (dim < 1) throw Error("RingMatrix: dimension must be >= 1");
  a_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), ring_zero(ring_));
}

RingMatrix RingMatrix::identity(const Ring& r, int dim) {
  RingMatrix m(r, dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, ring_one(r));
  return m;
}

const RingElem& RingMatrix::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw Error("RingMatrix: index out of range");
  return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j)];
}

void RingMatrix::set(int i, int j, RingElem v) {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw Error("RingMatrix: index out of range");
  if (v.ring() != ring_) throw RingMismatchError("RingMatrix::set");
  a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j)] = std::move(v);
}

RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b) {
  if (a.ring() != b.ring()) throw RingMismatchError("mat_mul");
  if (a.dim() != b.dim()) throw Error("mat_mul: dimension mismatch");
  int d = a.dim();
  RingMatrix out(a.ring(), d);
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      if (is_zero(a.at(i, k))) continue;
      for (int j = 0; j < d; ++j)
        out.set(i, j, out.at(i, j) + a.at(i, k) * b.at(k, j));
    }
  }
  return out;
}

RingElem trace(const RingMatrix& m) {
  RingElem t = ring_zero(m.ring());
  for (int i = 0; i < m.dim(); ++i) t = t + m.at(i, i);
  return t;
}

RingMatrix companion_matrix(const UnitSeries& P) {
  int d = poly_degree(P);
  if (d == 0) throw Error("companion_matrix: polynomial tail is zero");
  RingMatrix m(P.ring(), d);
  for (int i = 1; i < d; ++i) m.set(i, i - 1, ring_one(P.ring()));
  for (int i = 0; i < d; ++i) m.set(i, d - 1, -P.coeff(d - i));
  return m;
}

RingMatrix kronecker(const RingMatrix& m, const RingMatrix& n) {
  if (m.ring() != n.ring()) throw RingMismatchError("kronecker");
  int dm = m.dim(), dn = n.dim();
  RingMatrix out(m.ring(), dm * dn);
  for (int j = 0; j < dm; ++j)
    for (int i = 0; i < dm; ++i) {
      if (is_zero(m.at(j, i))) continue;
      for (int k = 0; k < dn; ++k)
        for (int l = 0; l < dn; ++l)
          out.set(j * dn + k, i * dn + l, m.at(j, i) * n.at(k, l));
    }
  return out;
}

// Berkowitz vector: coefficients v_0..v_d with det(I - MX) = sum v_k X^k.
// Division-free; peels leading rows with iterated Toeplitz products.
static std::vector<RingElem> berkowitz_det_coeffs(const RingMatrix& m) {
  const Ring& r = m.ring();
  const int d = m.dim();
  std::vector<RingElem> p{ring_one(r), -m.at(d - 1, d - 1)};
  for (int row = d - 2; row >= 0; --row) {
    const int k = d - row;  // size of the trailing block being absorbed
    // Toeplitz column t_0..t_k = 1, -a, -(R C), -(R A C), ... for the
    // partition [[a, R], [C, A]] of the trailing principal submatrix
    std::vector<RingElem> t{ring_one(r), -m.at(row, row)};
    std::vector<RingElem> w;
    w.reserve(static_cast<std::size_t>(k - 1));
    for (int i = row + 1; i < d; ++i) w.push_back(m.at(i, row));
    for (int j = 2; j <= k; ++j) {
      RingElem s = ring_zero(r);
      for (int i = row + 1; i < d; ++i) s = s + m.at(row, i) * w[static_cast<std::size_t>(i - row - 1)];
      t.push_back(-s);
      if (j < k) {
        std::vector<RingElem> nw;
        nw.reserve(w.size());
        for (int i = row + 1; i < d; ++i) {
          RingElem acc = ring_zero(r);
          for (int l = row + 1; l < d; ++l)
            acc = acc + m.at(i, l) * w[static_cast<std::size_t>(l - row - 1)];
          nw.push_back(std::move(acc));
        }
        w = std::move(nw);
      }
    }
    std::vector<RingElem> np(static_cast<std::size_t>(k) + 1, ring_zero(r));
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= i && j < static_cast<int>(t.size()); ++j)
        if (i - j < static_cast<int>(p.size()))
          np[static_cast<std::size_t>(i)] =
              np[static_cast<std::size_t>(i)] + t[static_cast<std::size_t>(j)] * p[static_cast<std::size_t>(i - j)];
    p = std::move(np);
  }
  return p;
}

UnitSeries det_series(const RingMatrix& m, int order) {
  std::vector<RingElem> v = berkowitz_det_coeffs(m);
  UnitSeries out = UnitSeries::one(m.ring(), order);
  for (int k = 1; k <= order && k < static_cast<int>(v.size()); ++k)
    out.set_coeff(k, v[static_cast<std::size_t>(k)]);

  if (m.ring().is_q_algebra()) {
    // independent route: det(I - MX) = exp(-sum Tr(M^k) X^k / k)
    ExpForm F(m.ring(), order);
    RingMatrix power = m;
    for (int k = 1; k <= order; ++k) {
      F.set_f(k, int_divide(-trace(power), k));
      if (k < order) power = mat_mul(power, m);
    }
    if (series_exp(F) != out)
      throw Error("det_series: Berkowitz and trace-exponential routes disagree");
  }
  return out;
}

UnitSeries ene_tensor(const UnitSeries& P, const UnitSeries& Q, int order) {
  if (P.ring() != Q.ring()) throw RingMismatchError("ene_tensor");
  if (poly_degree(P) == 0 || poly_degree(Q) == 0) return UnitSeries::one(P.ring(), order);
  return det_series(kronecker(companion_matrix(P), companion_matrix(Q)), order);
}

}  // namespace ene
