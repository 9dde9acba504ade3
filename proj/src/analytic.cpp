#include "ene/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "ene/errors.hpp"
#include "ene/product.hpp"

namespace ene {

namespace {

using cplx = std::complex<double>;

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<cplx> coeffs_of(const UnitSeries& p, int deg) {
  std::vector<cplx> c(deg + 1);
  for (int k = 0; k <= deg; ++k) c[k] = p.coeff(k).cplx();
  return c;
}

cplx horner(const std::vector<cplx>& c, cplx z) {
  cplx v = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * z + c[k];
  return v;
}

std::vector<cplx> derivative_coeffs(const std::vector<cplx>& c) {
  std::vector<cplx> d(c.size() > 1 ? c.size() - 1 : 1, 0.0);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = double(k) * c[k];
  return d;
}

// upper bound on root moduli: 2 * max_k |c_{d-k}/c_d|^(1/k)
double fujiwara_bound(const std::vector<cplx>& c) {
  int d = static_cast<int>(c.size()) - 1;
  double b = 0.0;
  for (int k = 1; k <= d; ++k)
    b = std::max(b, std::pow(std::abs(c[d - k] / c[d]), 1.0 / k));
  return 2.0 * b;
}

int require_complex_poly(const char* what, const UnitSeries& p) {
  if (p.ring().kind() != RingKind::ComplexFloat)
    throw Error(std::string(what) + ": complex coefficients required");
  int d = poly_degree(p);
  if (d < 1) throw Error(std::string(what) + ": degree must be at least 1");
  return d;
}

UnitSeries ene_of_polys(const UnitSeries& p, int dp, const UnitSeries& q, int dq) {
  int d = dp * dq;
  return ene(poly_extend(truncate(p, dp), d), poly_extend(truncate(q, dq), d));
}

}  // namespace

int ZeroSet::total() const {
  int t = 0;
  for (int m : mults) t += m;
  return t;
}

std::vector<cplx> ZeroSet::flatten() const {
  std::vector<cplx> out;
  for (std::size_t i = 0; i < zeros.size(); ++i)
    out.insert(out.end(), mults[i], zeros[i]);
  return out;
}

ZeroSet poly_roots(const UnitSeries& p, double tol, unsigned seed, int max_iters) {
  int d = require_complex_poly("poly_roots", p);
  if (tol <= 0) throw Error("poly_roots: tolerance must be positive");
  std::vector<cplx> c = coeffs_of(p, d);
  std::vector<cplx> dc = derivative_coeffs(c);

  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> jitter(-1.0, 1.0);

  double r0 = std::max(0.5 * fujiwara_bound(c), 1e-6);
  std::vector<cplx> z(d);
  for (int i = 0; i < d; ++i) {
    double th = 2.0 * M_PI * i / d + 0.7;
    z[i] = std::polar(r0, th);
  }

  double best = kInf;
  int since_improvement = 0;
  bool settled = false;
  for (int iter = 0; iter < max_iters && !settled; ++iter) {
    double worst_resid = 0.0;
    double worst_step = 0.0;
    for (int i = 0; i < d; ++i) {
      cplx pv = horner(c, z[i]);
      worst_resid = std::max(worst_resid, std::abs(pv));
      cplx dv = horner(dc, z[i]);
      if (std::abs(dv) < 1e-300) {
        z[i] += 1e-3 * (1.0 + std::abs(z[i])) * cplx(jitter(gen), jitter(gen));
        worst_step = kInf;
        continue;
      }
      cplx newton = pv / dv;
      cplx s = 0.0;
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        cplx diff = z[i] - z[j];
        if (std::abs(diff) < 1e-300)
          diff = 1e-12 * (1.0 + std::abs(z[i])) * cplx(jitter(gen), jitter(gen));
        s += 1.0 / diff;
      }
      cplx denom = 1.0 - newton * s;
      cplx w = std::abs(denom) < 1e-300 ? newton : newton / denom;
      z[i] -= w;
      worst_step = std::max(worst_step, std::abs(w) / (1.0 + std::abs(z[i])));
    }
    // refine until the corrections hit the double-precision floor, not just
    // the acceptance residual: callers compare roots much more tightly
    if (worst_step <= 1e-15 || (worst_step <= 1e-12 && worst_resid <= tol)) settled = true;
    if (worst_resid < 0.7 * best) {
      best = worst_resid;
      since_improvement = 0;
    } else if (worst_resid > tol && ++since_improvement >= 30) {
      // genuine stagnation above the acceptance target; a configuration that
      // already meets it must never be perturbed away
      for (int i = 0; i < d; ++i)
        z[i] *= 1.0 + 0.05 * cplx(jitter(gen), jitter(gen));
      since_improvement = 0;
    }
  }

  for (int i = 0; i < d; ++i) {
    double bound = tol * std::pow(1.0 + std::abs(z[i]), d);
    if (!(std::abs(horner(c, z[i])) <= bound))
      throw NonConvergenceError("NonConvergence: poly_roots residual target not met");
  }

  double merge = std::sqrt(tol);
  ZeroSet out;
  for (const cplx& root : z) {
    bool placed = false;
    for (std::size_t k = 0; k < out.zeros.size() && !placed; ++k) {
      if (std::abs(root - out.zeros[k]) <= merge) {
        out.zeros[k] = (out.zeros[k] * double(out.mults[k]) + root) / double(out.mults[k] + 1);
        ++out.mults[k];
        placed = true;
      }
    }
    if (!placed) {
      out.zeros.push_back(root);
      out.mults.push_back(1);
    }
  }
  return out;
}

double radius_estimate(const UnitSeries& f) {
  if (f.ring().kind() != RingKind::ComplexFloat)
    throw Error("radius_estimate: complex coefficients required");
  int n = f.order();
  if (n < 8) throw Error("radius_estimate: order must be at least 8");
  double mx = 0.0;
  for (int i = n / 2 + 1; i <= n; ++i)
    mx = std::max(mx, std::pow(std::abs(f.coeff(i).cplx()), 1.0 / i));
  if (mx <= 0.1) return kInf;
  return 1.0 / mx;
}

double ene_radius(const ZeroSet& z) {
  double r = kInf;
  for (const cplx& a : z.zeros) r = std::min(r, std::abs(a));
  return r;
}

double ene_radius(const UnitSeries& f, double tol, unsigned seed) {
  if (f.ring().kind() != RingKind::ComplexFloat)
    throw Error("ene_radius: complex coefficients required");
  if (poly_degree(f) == 0) return kInf;
  return ene_radius(poly_roots(f, tol, seed));
}

ZeroProductReport verify_zero_products(const UnitSeries& p, const UnitSeries& q, double tol,
                                       unsigned seed) {
  int dp = require_complex_poly("verify_zero_products", p);
  int dq = require_complex_poly("verify_zero_products", q);
  std::vector<cplx> alphas = poly_roots(p, tol, seed).flatten();
  std::vector<cplx> betas = poly_roots(q, tol, seed + 1).flatten();

  std::vector<cplx> expected;
  expected.reserve(alphas.size() * betas.size());
  for (const cplx& a : alphas)
    for (const cplx& b : betas) expected.push_back(a * b);

  std::vector<cplx> found = poly_roots(ene_of_polys(p, dp, q, dq), tol, seed + 2).flatten();

  std::size_t n = expected.size();
  std::vector<std::vector<double>> cost(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cost[i][j] = std::abs(expected[i] - found[j]);
  std::vector<int> match = min_cost_assignment(cost);

  ZeroProductReport rep;
  rep.max_mismatch = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    rep.pairs.emplace_back(expected[i], found[match[i]]);
    rep.max_mismatch = std::max(rep.max_mismatch, cost[i][match[i]]);
  }
  rep.pass = rep.max_mismatch <= tol;
  return rep;
}

RadiusReport radius_inequality_check(const UnitSeries& f, const UnitSeries& g, double tol,
                                     unsigned seed) {
  require_complex_poly("radius_inequality_check", f);
  require_complex_poly("radius_inequality_check", g);
  std::vector<cplx> alphas = poly_roots(f, tol, seed).flatten();
  std::vector<cplx> betas = poly_roots(g, tol, seed + 1).flatten();
  double product_side = kInf;
  for (const cplx& a : alphas)
    for (const cplx& b : betas) product_side = std::min(product_side, std::abs(a * b));
  double factor_side = ene_radius(poly_roots(f, tol, seed)) * ene_radius(poly_roots(g, tol, seed + 1));
  return {product_side >= factor_side * (1.0 - 1e-9), product_side, factor_side};
}

UnitSeries expansion(const GenusFactorization& f, int order, const Ring& r) {
  if (r.kind() != RingKind::ComplexFloat)
    throw Error("expansion: complex coefficients required");
  if (f.genus < 0) throw Error("expansion: negative genus");
  if (static_cast<int>(f.poly.size()) > f.genus + 1)
    throw Error("expansion: polynomial part exceeds the genus");
  if (!f.poly.empty() && f.poly[0] != 0.0)
    throw Error("expansion: polynomial part must vanish at the origin");
  if (f.zeros.zeros.size() != f.zeros.mults.size())
    throw Error("expansion: malformed zero set");

  ExpForm F(r, order);
  for (int k = 1; k < static_cast<int>(f.poly.size()) && k <= order; ++k)
    F.set_f(k, RingElem(r, f.poly[k]));
  for (std::size_t t = 0; t < f.zeros.zeros.size(); ++t) {
    cplx a = f.zeros.zeros[t];
    if (a == 0.0) throw Error("expansion: zero at the origin");
    double m = f.zeros.mults[t];
    cplx inv = 1.0 / a;
    cplx pw = std::pow(inv, f.genus + 1);
    for (int k = f.genus + 1; k <= order; ++k, pw *= inv)
      F.set_f(k, ring_sub(F.f(k), RingElem(r, m / double(k) * pw)));
  }
  return series_exp(F);
}

GenusEneResult genus_factorization_ene(const GenusFactorization& f, const GenusFactorization& g,
                                       int order, double tol, const Ring& r) {
  if (f.genus != g.genus) throw Error("genus_factorization_ene: genus mismatch");
  int rho = f.genus;

  GenusFactorization h;
  h.genus = rho;
  h.poly.assign(rho + 1, 0.0);
  for (int k = 1; k <= rho; ++k) {
    cplx fk = k < static_cast<int>(f.poly.size()) ? f.poly[k] : 0.0;
    cplx gk = k < static_cast<int>(g.poly.size()) ? g.poly[k] : 0.0;
    h.poly[k] = -double(k) * fk * gk;
  }
  for (std::size_t i = 0; i < f.zeros.zeros.size(); ++i)
    for (std::size_t j = 0; j < g.zeros.zeros.size(); ++j) {
      h.zeros.zeros.push_back(f.zeros.zeros[i] * g.zeros.zeros[j]);
      h.zeros.mults.push_back(f.zeros.mults[i] * g.zeros.mults[j]);
    }

  GenusEneResult out{h, expansion(h, order, r), ene(expansion(f, order, r), expansion(g, order, r)),
                     0.0};
  for (int k = 0; k <= order; ++k)
    out.max_error =
        std::max(out.max_error, std::abs(out.assembled.coeff(k).cplx() - out.direct.coeff(k).cplx()));
  if (out.max_error > tol)
    throw Error("genus_factorization_ene: factorization and series routes disagree");
  return out;
}

std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost) {
  int n = static_cast<int>(cost.size());
  if (n == 0) return {};
  for (const auto& row : cost)
    if (static_cast<int>(row.size()) != n) throw Error("min_cost_assignment: matrix not square");

  // potentials-based Hungarian algorithm, O(n^3); 1-based work arrays
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = match[j0], j1 = -1;
      double delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0);
  }

  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j)
    if (match[j]) row_to_col[match[j] - 1] = j - 1;
  return row_to_col;
}

}  // namespace ene
