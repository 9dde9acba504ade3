#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "ene/series.hpp"

namespace ene {

// zeros with multiplicities; series here have constant term 1, so the
// origin is never a zero
struct ZeroSet {
  std::vector<std::complex<double>> zeros;  // distinct cluster centers
  std::vector<int> mults;                   // same length as zeros

  int total() const;
  std::vector<std::complex<double>> flatten() const;  // repeated by multiplicity
};

// All roots of a complex polynomial with P(0) = 1 via the Aberth-Ehrlich
// simultaneous iteration: initial guesses on the Fujiwara-bound circle,
// seeded random perturbation restart on stagnation, accepted when every
// iterate meets |P(z)| <= tol * (1+|z|)^deg. Near-coincident roots are
// merged into clusters at threshold sqrt(tol) and reported with
// multiplicity = cluster size.
ZeroSet poly_roots(const UnitSeries& p, double tol, unsigned seed = 0, int max_iters = 200);

// Reciprocal of the largest |f_i|^(1/i) over the tail window (last half of
// the coefficients); a finite-order stand-in for the radius of convergence.
// Returns +infinity when the window maximum drops below 0.1 (every finite
// verdict is therefore <= 10). Needs order >= 8.
double radius_estimate(const UnitSeries& f);

// smallest zero modulus; +infinity for an empty zero set
double ene_radius(const ZeroSet& z);
// same through the root finder; f must be a genuine polynomial
double ene_radius(const UnitSeries& f, double tol, unsigned seed = 0);

struct ZeroProductReport {
  bool pass;
  double max_mismatch;
  // matched (expected product alpha_i * beta_j, root found in P (*) Q)
  std::vector<std::pair<std::complex<double>, std::complex<double>>> pairs;
};

// Roots of ene(P, Q) against the pairwise products of the roots of P and Q,
// matched as multisets by a sum-optimal assignment; passes when the largest
// matched distance is <= tol.
ZeroProductReport verify_zero_products(const UnitSeries& p, const UnitSeries& q, double tol,
                                       unsigned seed = 0);

struct RadiusReport {
  bool pass;
  double product_side;  // smallest |alpha_i beta_j|
  double factor_side;   // min|alpha| * min|beta|
};

// min_{i,j} |alpha_i beta_j| >= (min_i |alpha_i|)(min_j |beta_j|), computed
// from exact root products with relative slack 1e-9
RadiusReport radius_inequality_check(const UnitSeries& f, const UnitSeries& g, double tol,
                                     unsigned seed = 0);

// data of e^{F(z)} * prod_i E_genus(z / alpha_i) with deg F <= genus, F(0)=0
struct GenusFactorization {
  int genus;
  std::vector<std::complex<double>> poly;  // poly[k] multiplies z^k; poly[0] = 0
  ZeroSet zeros;
};

// expand the factorization as a unit series to the given order
UnitSeries expansion(const GenusFactorization& f, int order, const Ring& r);

struct GenusEneResult {
  GenusFactorization factorization;  // poly part F (*e) G, zeros {alpha_i beta_j}
  UnitSeries assembled;              // expansion of that factorization
  UnitSeries direct;                 // ene of the two input expansions
  double max_error;                  // largest coefficient distance
};

// Builds the factorization-level product of two same-genus factorizations
// and checks it against the series-level ene of their expansions; a
// disagreement above tol throws (it would mean an engine bug).
GenusEneResult genus_factorization_ene(const GenusFactorization& f, const GenusFactorization& g,
                                       int order, double tol, const Ring& r);

// min-cost perfect assignment on a square cost matrix; returns the column
// picked for each row (exposed for the unit tests' brute-force comparison)
std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost);

}  // namespace ene
