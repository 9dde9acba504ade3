#include "ene/product.hpp"

namespace ene {

UnitSeries ene_exp(const UnitSeries& f, const UnitSeries& g) {
  if (f.ring() != g.ring()) throw RingMismatchError("ene_exp");
  if (!f.ring().is_q_algebra()) throw NotQAlgebraError("ene_exp");
  int n = std::min(f.order(), g.order());
  ExpForm F = series_log(truncate(f, n)), G = series_log(truncate(g, n));
  ExpForm H(f.ring(), n);
  for (int i = 1; i <= n; ++i) H.set_f(i, -int_scale(i, F.f(i) * G.f(i)));
  return series_exp(H);
}

UnitSeries ene_universal(const UnitSeries& f, const UnitSeries& g) {
  if (f.ring() != g.ring()) throw RingMismatchError("ene_universal");
  int n = std::min(f.order(), g.order());
  std::vector<RingElem> a, b;
  a.reserve(static_cast<std::size_t>(n));
  b.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    a.push_back(f.coeff(k));
    b.push_back(g.coeff(k));
  }
  UnitSeries out = UnitSeries::one(f.ring(), n);
  for (int k = 1; k <= n; ++k) {
    RingElem v = universal_poly(k).evaluate(a, b);
    out.set_coeff(k, k % 2 == 0 ? v : -v);
  }
  return out;
}

UnitSeries ene(const UnitSeries& f, const UnitSeries& g) {
  return f.ring().is_q_algebra() ? ene_exp(f, g) : ene_universal(f, g);
}

UnitSeries ene_roots(const Ring& r, const std::vector<RingElem>& alphas,
                     const std::vector<RingElem>& betas, int order) {
  UnitSeries out = UnitSeries::one(r, order);
  for (const auto& al : alphas) {
    for (const auto& be : betas) {
      auto inv = try_invert(al * be);
      if (!inv) throw NotInvertibleError("ene_roots", 0);
      UnitSeries factor = UnitSeries::one(r, order);
      if (order >= 1) factor.set_coeff(1, -*inv);
      out = series_mul(out, factor);
    }
  }
  return out;
}

UnitSeries ene_pow(const UnitSeries& f, int n) {
  if (n < 0) throw Error("ene_pow: negative exponent");
  if (n == 0) {
    // the ene unit 1 - X
    UnitSeries u = UnitSeries::one(f.ring(), f.order());
    if (f.order() >= 1) u.set_coeff(1, -ring_one(f.ring()));
    return u;
  }
  if (f.ring().is_q_algebra()) {
    ExpForm F = series_log(f);
    ExpForm G(f.ring(), f.order());
    for (int i = 1; i <= f.order(); ++i) {
      // (-1)^(n-1) i^(n-1) F_i^n
      mpz_class w;
      mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(n - 1));
      if (n % 2 == 0) w = -w;
      G.set_f(i, int_scale(w, elem_pow(F.f(i), static_cast<unsigned>(n))));
    }
    return series_exp(G);
  }
  UnitSeries acc = f;
  for (int k = 1; k < n; ++k) acc = ene_universal(acc, f);
  return acc;
}

UnitSeries ene_inverse(const UnitSeries& f) {
  if (!f.ring().is_q_algebra()) throw NotQAlgebraError("ene_inverse");
  ExpForm F = series_log(f);
  ExpForm G(f.ring(), f.order());
  for (int i = 1; i <= f.order(); ++i) {
    auto inv = try_invert(F.f(i));
    if (!inv) throw NotInvertibleError("ene_inverse", i);
    G.set_f(i, int_divide(*inv, mpz_class(i) * mpz_class(i)));
  }
  return series_exp(G);
}

ZeroDivisorVerdict is_zero_divisor(const UnitSeries& f) {
  if (!f.ring().is_q_algebra()) throw NotQAlgebraError("is_zero_divisor");
  ExpForm F = series_log(f);
  for (int i = 1; i <= f.order(); ++i)
    if (is_zero_or_zero_divisor(F.f(i))) return {true, i};
  return {false, 0};
}

}  // namespace ene
