#include "ene/series.hpp"

#include <algorithm>

namespace ene {

Series::Series(Ring r, int order) : ring_(std::move(r)) {
  if (order < 0) throw Error("Series: negative order");
  c_.assign(static_cast<std::size_t>(order) + 1, ring_zero(ring_));
}

Series::Series(Ring r, int order, std::vector<RingElem> coeffs) : ring_(std::move(r)), c_(std::move(coeffs)) {
  if (order < 0) throw Error("Series: negative order");
  if (c_.size() != static_cast<std::size_t>(order) + 1)
    throw Error("Series: coefficient count does not match order");
  for (const auto& x : c_)
    if (x.ring() != ring_) throw RingMismatchError("Series coefficients");
}

const RingElem& Series::coeff(int k) const {
  if (k < 0 || k > order()) throw Error("Series::coeff: index out of range");
  return c_[static_cast<std::size_t>(k)];
}

void Series::set_coeff(int k, RingElem v) {
  if (k < 0 || k > order()) throw Error("Series::set_coeff: index out of range");
  if (v.ring() != ring_) throw RingMismatchError("Series::set_coeff");
  c_[static_cast<std::size_t>(k)] = std::move(v);
}

bool operator==(const Series& a, const Series& b) {
  if (a.ring_ != b.ring_ || a.order() != b.order()) return false;
  for (int k = 0; k <= a.order(); ++k)
    if (a.coeff(k) != b.coeff(k)) return false;
  return true;
}

UnitSeries::UnitSeries(Series s) : s_(std::move(s)) {
  if (s_.coeff(0) != ring_one(s_.ring()))
    throw Error("UnitSeries: constant term must be 1");
}

UnitSeries UnitSeries::one(const Ring& r, int order) {
  Series s(r, order);
  s.set_coeff(0, ring_one(r));
  return UnitSeries(std::move(s));
}

void UnitSeries::set_coeff(int k, RingElem v) {
  if (k == 0) throw Error("UnitSeries: constant term is fixed");
  s_.set_coeff(k, std::move(v));
}

ExpForm::ExpForm(Ring r, int order) : ring_(std::move(r)) {
  if (!ring_.is_q_algebra()) throw NotQAlgebraError("ExpForm");
  if (order < 0) throw Error("ExpForm: negative order");
  f_.assign(static_cast<std::size_t>(order), ring_zero(ring_));
}

ExpForm::ExpForm(Ring r, int order, std::vector<RingElem> f) : ring_(std::move(r)), f_(std::move(f)) {
  if (!ring_.is_q_algebra()) throw NotQAlgebraError("ExpForm");
  if (order < 0 || f_.size() != static_cast<std::size_t>(order))
    throw Error("ExpForm: coefficient count does not match order");
  for (const auto& x : f_)
    if (x.ring() != ring_) throw RingMismatchError("ExpForm coefficients");
}

const RingElem& ExpForm::f(int i) const {
  if (i < 1 || i > order()) throw Error("ExpForm::f: index out of range");
  return f_[static_cast<std::size_t>(i - 1)];
}

void ExpForm::set_f(int i, RingElem v) {
  if (i < 1 || i > order()) throw Error("ExpForm::set_f: index out of range");
  if (v.ring() != ring_) throw RingMismatchError("ExpForm::set_f");
  f_[static_cast<std::size_t>(i - 1)] = std::move(v);
}

bool operator==(const ExpForm& a, const ExpForm& b) {
  if (a.ring_ != b.ring_ || a.order() != b.order()) return false;
  for (int i = 1; i <= a.order(); ++i)
    if (a.f(i) != b.f(i)) return false;
  return true;
}

// ---- arithmetic --------------------------------------------------------------

static void require_same(const Series& a, const Series& b, const char* op) {
  if (a.ring() != b.ring()) throw RingMismatchError(op);
}

Series add(const Series& a, const Series& b) {
  require_same(a, b, "add");
  int n = std::min(a.order(), b.order());
  Series out(a.ring(), n);
  for (int k = 0; k <= n; ++k) out.set_coeff(k, a.coeff(k) + b.coeff(k));
  return out;
}

Series sub(const Series& a, const Series& b) {
  require_same(a, b, "sub");
  int n = std::min(a.order(), b.order());
  Series out(a.ring(), n);
  for (int k = 0; k <= n; ++k) out.set_coeff(k, a.coeff(k) - b.coeff(k));
  return out;
}

Series negate(const Series& a) {
  Series out(a.ring(), a.order());
  for (int k = 0; k <= a.order(); ++k) out.set_coeff(k, -a.coeff(k));
  return out;
}

Series mul(const Series& a, const Series& b) {
  require_same(a, b, "mul");
  int n = std::min(a.order(), b.order());
  Series out(a.ring(), n);
  for (int i = 0; i <= n; ++i) {
    if (is_zero(a.coeff(i))) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (is_zero(b.coeff(j))) continue;
      out.set_coeff(i + j, out.coeff(i + j) + a.coeff(i) * b.coeff(j));
    }
  }
  return out;
}

Series scalar_mul(const RingElem& c, const Series& a) {
  if (c.ring() != a.ring()) throw RingMismatchError("scalar_mul");
  Series out(a.ring(), a.order());
  for (int k = 0; k <= a.order(); ++k) out.set_coeff(k, c * a.coeff(k));
  return out;
}

UnitSeries series_mul(const UnitSeries& a, const UnitSeries& b) {
  return UnitSeries(mul(a.series(), b.series()));
}

UnitSeries series_invert(const UnitSeries& a) {
  // with f_0 = 1 the inverse satisfies g_n = -sum_{k=1..n} f_k g_{n-k}
  int n = a.order();
  Series g(a.ring(), n);
  g.set_coeff(0, ring_one(a.ring()));
  for (int m = 1; m <= n; ++m) {
    RingElem acc = ring_zero(a.ring());
    for (int k = 1; k <= m; ++k) acc = acc + a.coeff(k) * g.coeff(m - k);
    g.set_coeff(m, -acc);
  }
  return UnitSeries(std::move(g));
}

UnitSeries series_div(const UnitSeries& a, const UnitSeries& b) {
  return series_mul(a, series_invert(b));
}

ExpForm series_log(const UnitSeries& f) {
  if (!f.ring().is_q_algebra()) throw NotQAlgebraError("series_log");
  int n = f.order();
  ExpForm F(f.ring(), n);
  for (int m = 1; m <= n; ++m) {
    // m f_m = sum_{k=1..m} k F_k f_{m-k}, solve for F_m
    RingElem acc = ring_zero(f.ring());
    for (int k = 1; k < m; ++k) acc = acc + int_scale(k, F.f(k)) * f.coeff(m - k);
    F.set_f(m, f.coeff(m) - int_divide(acc, m));
  }
  return F;
}

UnitSeries series_exp(const ExpForm& F) {
  int n = F.order();
  Series g(F.ring(), n);
  g.set_coeff(0, ring_one(F.ring()));
  for (int m = 1; m <= n; ++m) {
    RingElem acc = ring_zero(F.ring());
    for (int k = 1; k <= m; ++k) acc = acc + int_scale(k, F.f(k)) * g.coeff(m - k);
    g.set_coeff(m, int_divide(acc, m));
  }
  return UnitSeries(std::move(g));
}

Series derivative(const Series& a) {
  if (a.order() == 0) throw Error("derivative: order 0 holds no derivative data");
  Series out(a.ring(), a.order() - 1);
  for (int k = 1; k <= a.order(); ++k) out.set_coeff(k - 1, int_scale(k, a.coeff(k)));
  return out;
}

Series log_derivative(const UnitSeries& f) {
  if (f.order() == 0) throw Error("log_derivative: order 0 holds no derivative data");
  UnitSeries inv = series_invert(truncate(f, f.order() - 1));
  return mul(derivative(f.series()), inv.series());
}

UnitSeries exp_log_derivative(const UnitSeries& f) {
  if (!f.ring().is_q_algebra()) throw NotQAlgebraError("exp_log_derivative");
  Series ld = log_derivative(f);
  ExpForm F(f.ring(), f.order());
  for (int i = 1; i <= f.order(); ++i) F.set_f(i, ld.coeff(i - 1));
  return series_exp(F);
}

Series scale_argument(const Series& a, const RingElem& s) {
  if (s.ring() != a.ring()) throw RingMismatchError("scale_argument");
  Series out(a.ring(), a.order());
  RingElem p = ring_one(a.ring());
  for (int k = 0; k <= a.order(); ++k) {
    out.set_coeff(k, p * a.coeff(k));
    if (k < a.order()) p = p * s;
  }
  return out;
}

Series substitute_power(const Series& a, int k) {
  if (k < 1) throw Error("substitute_power: exponent must be >= 1");
  Series out(a.ring(), a.order());
  for (int i = 0; i * k <= a.order(); ++i) out.set_coeff(i * k, a.coeff(i));
  return out;
}

Series truncate(const Series& a, int M) {
  if (M < 0 || M > a.order()) throw Error("truncate: target order out of range");
  Series out(a.ring(), M);
  for (int k = 0; k <= M; ++k) out.set_coeff(k, a.coeff(k));
  return out;
}

UnitSeries truncate(const UnitSeries& a, int M) { return UnitSeries(truncate(a.series(), M)); }

UnitSeries poly_extend(const UnitSeries& a, int M) {
  if (M <= a.order()) return truncate(a, M);
  Series out(a.ring(), M);
  for (int k = 0; k <= a.order(); ++k) out.set_coeff(k, a.coeff(k));
  return UnitSeries(std::move(out));
}

UnitSeries exp_truncate(const UnitSeries& f, int M) {
  if (M < 0 || M > f.order()) throw Error("exp_truncate: target order out of range");
  ExpForm F = series_log(f);
  for (int i = M + 1; i <= F.order(); ++i) F.set_f(i, ring_zero(f.ring()));
  return series_exp(F);
}

Series hadamard(const Series& a, const Series& b) {
  require_same(a, b, "hadamard");
  int n = std::min(a.order(), b.order());
  Series out(a.ring(), n);
  for (int k = 0; k <= n; ++k) out.set_coeff(k, a.coeff(k) * b.coeff(k));
  return out;
}

Series koebe(const Ring& r, int order) {
  Series out(r, order);
  for (int k = 1; k <= order; ++k) out.set_coeff(k, from_int(r, k));
  return out;
}

Series hadamard_one(const Ring& r, int order) {
  Series out(r, order);
  for (int k = 0; k <= order; ++k) out.set_coeff(k, ring_one(r));
  return out;
}

Series to_series(const ExpForm& F) {
  Series out(F.ring(), F.order());
  for (int i = 1; i <= F.order(); ++i) out.set_coeff(i, F.f(i));
  return out;
}

ExpForm exp_form_of(const Series& a) {
  if (!is_zero(a.coeff(0))) throw Error("exp_form_of: constant term must vanish");
  ExpForm F(a.ring(), a.order());
  for (int i = 1; i <= a.order(); ++i) F.set_f(i, a.coeff(i));
  return F;
}

Series derivative_of_log(const ExpForm& F) {
  if (F.order() == 0) throw Error("derivative_of_log: order 0 holds no derivative data");
  Series out(F.ring(), F.order() - 1);
  for (int i = 1; i <= F.order(); ++i) out.set_coeff(i - 1, int_scale(i, F.f(i)));
  return out;
}

UnitSeries unit_from(const Ring& r, int order, const std::vector<std::string>& tail) {
  if (static_cast<int>(tail.size()) > order)
    throw Error("unit_from: more coefficients than the order holds");
  UnitSeries u = UnitSeries::one(r, order);
  for (std::size_t i = 0; i < tail.size(); ++i)
    u.set_coeff(static_cast<int>(i) + 1, parse_elem(r, tail[i]));
  return u;
}

Series geometric(const Ring& r, int order, const RingElem& a) {
  if (a.ring() != r) throw RingMismatchError("geometric");
  Series out(r, order);
  RingElem p = ring_one(r);
  for (int k = 0; k <= order; ++k) {
    out.set_coeff(k, p);
    if (k < order) p = p * a;
  }
  return out;
}

int poly_degree(const Series& a) {
  for (int k = a.order(); k >= 1; --k)
    if (!is_zero(a.coeff(k))) return k;
  return 0;
}

int poly_degree(const UnitSeries& a) { return poly_degree(a.series()); }

bool agree_to_order(const Series& a, const Series& b, int M) {
  if (a.ring() != b.ring()) return false;
  if (M > a.order() || M > b.order()) throw Error("agree_to_order: order exceeds operand");
  for (int k = 0; k <= M; ++k)
    if (a.coeff(k) != b.coeff(k)) return false;
  return true;
}

bool agree_to_order(const UnitSeries& a, const UnitSeries& b, int M) {
  return agree_to_order(a.series(), b.series(), M);
}

static bool display_parens(const std::string& s) {
  if (!s.empty() && s.front() == '[') return false;
  return s.find_first_of(" +") != std::string::npos ||
         (s.find('-', 1) != std::string::npos);
}

std::string pretty(const Series& a) {
  std::string out;
  for (int k = 0; k <= a.order(); ++k) {
    if (is_zero(a.coeff(k))) continue;
    std::string c = to_text(a.coeff(k));
    bool neg = false;
    if (!display_parens(c) && !c.empty() && c.front() == '-') {
      neg = true;
      c = c.substr(1);
    }
    std::string xpow = k == 0 ? "" : (k == 1 ? "X" : "X^" + std::to_string(k));
    std::string body;
    if (k == 0) {
      body = display_parens(c) ? "(" + c + ")" : c;
    } else if (c == "1") {
      body = xpow;
    } else {
      body = (display_parens(c) ? "(" + c + ")" : c) + "*" + xpow;
    }
    if (out.empty()) {
      out = (neg ? "-" : "") + body;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  if (out.empty()) out = "0";
  out += " + O(X^" + std::to_string(a.order() + 1) + ")";
  return out;
}

std::string pretty(const UnitSeries& a) { return pretty(a.series()); }

}  // namespace ene
