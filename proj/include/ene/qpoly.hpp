#pragma once

#include <string>
#include <vector>

#include "ene/ring.hpp"

namespace ene {

// One monomial of a universal coefficient polynomial: integer coefficient
// times prod X_i^{xexp[i-1]} * prod Y_j^{yexp[j-1]}, exponent vectors of
// length p.
struct UnivTerm {
  Monomial xexp;
  Monomial yexp;
  mpz_class coeff;
};

// Q_p, the integer polynomial with c_p = (-1)^p Q_p(a_1..a_p, b_1..b_p) for
// the product of two generic unit series. Generated symbolically, checked
// structurally, and cached (in memory and on disk).
class UnivPoly {
 public:
  int index() const noexcept { return p_; }
  const std::vector<UnivTerm>& terms() const noexcept { return terms_; }

  // Display form, e.g. "-2*X2*Y2 + X2*Y1^2 + X1^2*Y2". Term order: plain
  // descending lexicographic with significance X_p > ... > X_1 > Y_p > ... > Y_1.
  std::string canonical_text() const;
  // Cache file body: "p=<n>" header then one "coeff monomial" line per term,
  // same term order as canonical_text. Deterministic across runs.
  std::string cache_text() const;
  static UnivPoly from_cache_text(const std::string& body);

  // Q_p(a_1..a_p, b_1..b_p) over the ring of a[0]; a and b need >= p entries.
  RingElem evaluate(const std::vector<RingElem>& a, const std::vector<RingElem>& b) const;

 private:
  friend UnivPoly generate_univ_poly(int p);
  UnivPoly() = default;
  void sort_and_check();  // canonical order + structural assertions

  int p_ = 0;
  std::vector<UnivTerm> terms_;
};

// Symbolic generation from the exponential form over Q[X1..Xp, Y1..Yp],
// including integrality and structure checks. Cost grows quickly with p.
UnivPoly generate_univ_poly(int p);

// Memoized access: memory first, then the disk cache directory (ENE_CACHE_DIR,
// default ./ene_cache), then generation (which writes the disk cache).
// Thread-safe; the returned reference stays valid for the process lifetime.
const UnivPoly& universal_poly(int p);

}  // namespace ene
