#include "ene/ring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ene {

namespace {

std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t s = a + b;  // m < 2^62 keeps this from wrapping
  return s >= m ? s - m : s;
}

std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::string fmt_double(double x) {
  if (x == 0.0) x = 0.0;  // canonical zero, drops the sign of -0
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

bool valid_var_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

struct Ring::Node {
  RingKind kind;
  std::uint64_t modulus = 0;
  double eps = 0.0;
  std::optional<Ring> base;
  std::vector<std::string> vars;
};

Ring Ring::rationals() {
  static const auto n = std::make_shared<const Node>(Node{RingKind::BigRational, 0, 0.0, {}, {}});
  return Ring(n);
}

Ring Ring::integers() {
  static const auto n = std::make_shared<const Node>(Node{RingKind::BigInteger, 0, 0.0, {}, {}});
  return Ring(n);
}

Ring Ring::modular(std::uint64_t m) {
  if (m < 2 || m >= (std::uint64_t{1} << 62))
    throw Error("modular ring requires 2 <= m < 2^62");
  return Ring(std::make_shared<const Node>(Node{RingKind::Modular, m, 0.0, {}, {}}));
}

Ring Ring::complexes(double eps) {
  if (!(eps > 0.0) || !(eps < 1.0))
    throw Error("complex ring requires 0 < eps < 1");
  return Ring(std::make_shared<const Node>(Node{RingKind::ComplexFloat, 0, eps, {}, {}}));
}

Ring Ring::polynomials(Ring base, std::vector<std::string> vars) {
  if (vars.empty()) throw Error("polynomial ring requires at least one variable");
  for (const auto& v : vars)
    if (!valid_var_name(v)) throw Error("polynomial ring: bad variable name '" + v + "'");
  auto sorted = vars;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error("polynomial ring: duplicate variable name");
  Node n{RingKind::Polynomial, 0, 0.0, std::move(base), std::move(vars)};
  return Ring(std::make_shared<const Node>(std::move(n)));
}

RingKind Ring::kind() const noexcept { return node_->kind; }

bool Ring::is_q_algebra() const noexcept {
  switch (node_->kind) {
    case RingKind::BigRational:
    case RingKind::ComplexFloat:
      return true;
    case RingKind::Polynomial:
      return node_->base->is_q_algebra();
    default:
      return false;
  }
}

std::uint64_t Ring::modulus() const {
  if (node_->kind != RingKind::Modular) throw Error("modulus(): not a modular ring");
  return node_->modulus;
}

double Ring::epsilon() const {
  if (node_->kind != RingKind::ComplexFloat) throw Error("epsilon(): not a complex ring");
  return node_->eps;
}

const Ring& Ring::base() const {
  if (node_->kind != RingKind::Polynomial) throw Error("base(): not a polynomial ring");
  return *node_->base;
}

const std::vector<std::string>& Ring::vars() const {
  if (node_->kind != RingKind::Polynomial) throw Error("vars(): not a polynomial ring");
  return node_->vars;
}

std::string Ring::name() const {
  switch (node_->kind) {
    case RingKind::BigRational: return "Q";
    case RingKind::BigInteger: return "Z";
    case RingKind::Modular: return "Z/" + std::to_string(node_->modulus);
    case RingKind::ComplexFloat: return "C(eps=" + fmt_double(node_->eps) + ")";
    case RingKind::Polynomial: {
      std::string s = node_->base->name() + "[";
      for (std::size_t i = 0; i < node_->vars.size(); ++i) {
        if (i) s += ",";
        s += node_->vars[i];
      }
      return s + "]";
    }
  }
  return "?";
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind) return false;
  switch (a.node_->kind) {
    case RingKind::BigRational:
    case RingKind::BigInteger:
      return true;
    case RingKind::Modular:
      return a.node_->modulus == b.node_->modulus;
    case RingKind::ComplexFloat:
      return a.node_->eps == b.node_->eps;
    case RingKind::Polynomial:
      return a.node_->vars == b.node_->vars && *a.node_->base == *b.node_->base;
  }
  return false;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  unsigned long da = std::accumulate(a.begin(), a.end(), 0ul);
  unsigned long db = std::accumulate(b.begin(), b.end(), 0ul);
  if (da != db) return da > db;
  return a > b;
}

// ---- RingElem construction -------------------------------------------------

RingElem::RingElem(Ring r, mpq_class v) : ring_(std::move(r)), v_(std::move(v)) {
  if (ring_.kind() != RingKind::BigRational) throw Error("RingElem: rational value in non-Q ring");
  std::get<mpq_class>(v_).canonicalize();
}

RingElem::RingElem(Ring r, mpz_class v) : ring_(std::move(r)), v_(std::move(v)) {
  if (ring_.kind() != RingKind::BigInteger) throw Error("RingElem: integer value in non-Z ring");
}

RingElem::RingElem(Ring r, std::uint64_t v) : ring_(std::move(r)), v_(v) {
  if (ring_.kind() != RingKind::Modular) throw Error("RingElem: residue value in non-modular ring");
  if (v >= ring_.modulus()) throw Error("RingElem: residue out of range");
}

RingElem::RingElem(Ring r, std::complex<double> v) : ring_(std::move(r)), v_(v) {
  if (ring_.kind() != RingKind::ComplexFloat) throw Error("RingElem: complex value in non-C ring");
}

RingElem::RingElem(Ring r, PolyTerms v) : ring_(std::move(r)) {
  if (ring_.kind() != RingKind::Polynomial) throw Error("RingElem: terms in non-polynomial ring");
  const std::size_t nv = ring_.vars().size();
  for (auto it = v.begin(); it != v.end();) {
    if (it->first.size() != nv) throw Error("RingElem: monomial arity mismatch");
    if (it->second.ring() != ring_.base()) throw Error("RingElem: coefficient from wrong base ring");
    it = is_zero(it->second) ? v.erase(it) : std::next(it);
  }
  v_ = std::make_shared<const PolyTerms>(std::move(v));
}

const mpq_class& RingElem::rat() const {
  if (auto* p = std::get_if<mpq_class>(&v_)) return *p;
  throw Error("RingElem: not a rational");
}

const mpz_class& RingElem::whole() const {
  if (auto* p = std::get_if<mpz_class>(&v_)) return *p;
  throw Error("RingElem: not an integer");
}

std::uint64_t RingElem::residue() const {
  if (auto* p = std::get_if<std::uint64_t>(&v_)) return *p;
  throw Error("RingElem: not a residue");
}

std::complex<double> RingElem::cplx() const {
  if (auto* p = std::get_if<std::complex<double>>(&v_)) return *p;
  throw Error("RingElem: not complex");
}

const PolyTerms& RingElem::terms() const {
  if (auto* p = std::get_if<std::shared_ptr<const PolyTerms>>(&v_)) return **p;
  throw Error("RingElem: not a polynomial");
}

// ---- constants and embeddings ----------------------------------------------

RingElem ring_zero(const Ring& r) {
  switch (r.kind()) {
    case RingKind::BigRational: return RingElem(r, mpq_class(0));
    case RingKind::BigInteger: return RingElem(r, mpz_class(0));
    case RingKind::Modular: return RingElem(r, std::uint64_t{0});
    case RingKind::ComplexFloat: return RingElem(r, std::complex<double>(0.0, 0.0));
    case RingKind::Polynomial: return RingElem(r, PolyTerms{});
  }
  throw Error("ring_zero: unknown kind");
}

RingElem ring_one(const Ring& r) { return from_int(r, 1); }

RingElem from_int(const Ring& r, const mpz_class& n) {
  switch (r.kind()) {
    case RingKind::BigRational: return RingElem(r, mpq_class(n));
    case RingKind::BigInteger: return RingElem(r, n);
    case RingKind::Modular: {
      std::uint64_t v = mpz_fdiv_ui(n.get_mpz_t(), r.modulus());
      return RingElem(r, v);
    }
    case RingKind::ComplexFloat: return RingElem(r, std::complex<double>(n.get_d(), 0.0));
    case RingKind::Polynomial: {
      RingElem c = from_int(r.base(), n);
      PolyTerms t;
      if (!is_zero(c)) t.emplace(Monomial(r.vars().size(), 0), std::move(c));
      return RingElem(r, std::move(t));
    }
  }
  throw Error("from_int: unknown kind");
}

RingElem from_int(const Ring& r, long n) { return from_int(r, mpz_class(n)); }

RingElem from_rational(const Ring& r, const mpq_class& q) {
  switch (r.kind()) {
    case RingKind::BigRational: return RingElem(r, q);
    case RingKind::ComplexFloat: return RingElem(r, std::complex<double>(q.get_d(), 0.0));
    case RingKind::Polynomial: {
      RingElem c = from_rational(r.base(), q);
      PolyTerms t;
      if (!is_zero(c)) t.emplace(Monomial(r.vars().size(), 0), std::move(c));
      return RingElem(r, std::move(t));
    }
    default:
      throw NotQAlgebraError("from_rational");
  }
}

RingElem poly_var(const Ring& r, std::size_t idx) {
  if (r.kind() != RingKind::Polynomial) throw Error("poly_var: not a polynomial ring");
  if (idx >= r.vars().size()) throw Error("poly_var: index out of range");
  Monomial m(r.vars().size(), 0);
  m[idx] = 1;
  PolyTerms t;
  t.emplace(std::move(m), ring_one(r.base()));
  return RingElem(r, std::move(t));
}

RingElem poly_term(const Ring& r, Monomial m, RingElem coeff) {
  PolyTerms t;
  t.emplace(std::move(m), std::move(coeff));
  return RingElem(r, std::move(t));
}

// ---- arithmetic --------------------------------------------------------------

static void require_same(const RingElem& a, const RingElem& b, const char* op) {
  if (a.ring() != b.ring()) throw RingMismatchError(op);
}

RingElem ring_add(const RingElem& a, const RingElem& b) {
  require_same(a, b, "ring_add");
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::BigRational: return RingElem(r, mpq_class(a.rat() + b.rat()));
    case RingKind::BigInteger: return RingElem(r, mpz_class(a.whole() + b.whole()));
    case RingKind::Modular: return RingElem(r, addm(a.residue(), b.residue(), r.modulus()));
    case RingKind::ComplexFloat: return RingElem(r, a.cplx() + b.cplx());
    case RingKind::Polynomial: {
      PolyTerms out = a.terms();
      for (const auto& [m, c] : b.terms()) {
        auto it = out.find(m);
        if (it == out.end()) {
          out.emplace(m, c);
        } else {
          it->second = it->second + c;
          if (is_zero(it->second)) out.erase(it);
        }
      }
      return RingElem(r, std::move(out));
    }
  }
  throw Error("ring_add: unknown kind");
}

RingElem ring_neg(const RingElem& a) {
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::BigRational: return RingElem(r, mpq_class(-a.rat()));
    case RingKind::BigInteger: return RingElem(r, mpz_class(-a.whole()));
    case RingKind::Modular: {
      std::uint64_t v = a.residue();
      return RingElem(r, v == 0 ? v : r.modulus() - v);
    }
    case RingKind::ComplexFloat: return RingElem(r, -a.cplx());
    case RingKind::Polynomial: {
      PolyTerms out;
      for (const auto& [m, c] : a.terms()) out.emplace(m, ring_neg(c));
      return RingElem(r, std::move(out));
    }
  }
  throw Error("ring_neg: unknown kind");
}

RingElem ring_sub(const RingElem& a, const RingElem& b) {
  require_same(a, b, "ring_sub");
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::BigRational: return RingElem(r, mpq_class(a.rat() - b.rat()));
    case RingKind::BigInteger: return RingElem(r, mpz_class(a.whole() - b.whole()));
    case RingKind::Modular: return RingElem(r, subm(a.residue(), b.residue(), r.modulus()));
    case RingKind::ComplexFloat: return RingElem(r, a.cplx() - b.cplx());
    case RingKind::Polynomial: return ring_add(a, ring_neg(b));
  }
  throw Error("ring_sub: unknown kind");
}

RingElem ring_mul(const RingElem& a, const RingElem& b) {
  require_same(a, b, "ring_mul");
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::BigRational: return RingElem(r, mpq_class(a.rat() * b.rat()));
    case RingKind::BigInteger: return RingElem(r, mpz_class(a.whole() * b.whole()));
    case RingKind::Modular: return RingElem(r, mulm(a.residue(), b.residue(), r.modulus()));
    case RingKind::ComplexFloat: return RingElem(r, a.cplx() * b.cplx());
    case RingKind::Polynomial: {
      PolyTerms out;
      const std::size_t nv = r.vars().size();
      for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
          Monomial m(nv);
          for (std::size_t i = 0; i < nv; ++i) m[i] = ma[i] + mb[i];
          RingElem c = ca * cb;
          auto it = out.find(m);
          if (it == out.end()) {
            if (!is_zero(c)) out.emplace(std::move(m), std::move(c));
          } else {
            it->second = it->second + c;
            if (is_zero(it->second)) out.erase(it);
          }
        }
      }
      return RingElem(r, std::move(out));
    }
  }
  throw Error("ring_mul: unknown kind");
}

bool is_zero(const RingElem& a) {
  switch (a.ring().kind()) {
    case RingKind::BigRational: return sgn(a.rat()) == 0;
    case RingKind::BigInteger: return sgn(a.whole()) == 0;
    case RingKind::Modular: return a.residue() == 0;
    case RingKind::ComplexFloat:
      return complex_close(a.cplx(), {0.0, 0.0}, a.ring().epsilon());
    case RingKind::Polynomial: {
      for (const auto& [m, c] : a.terms())
        if (!is_zero(c)) return false;
      return true;
    }
  }
  throw Error("is_zero: unknown kind");
}

bool ring_equal(const RingElem& a, const RingElem& b) {
  if (a.ring() != b.ring()) return false;
  switch (a.ring().kind()) {
    case RingKind::BigRational: return a.rat() == b.rat();
    case RingKind::BigInteger: return a.whole() == b.whole();
    case RingKind::Modular: return a.residue() == b.residue();
    case RingKind::ComplexFloat:
      return complex_close(a.cplx(), b.cplx(), a.ring().epsilon());
    case RingKind::Polynomial:
      // tolerance-carrying base rings make term-by-term comparison unsound
      // for missing-vs-tiny terms, so compare the difference against zero
      return is_zero(ring_sub(a, b));
  }
  throw Error("ring_equal: unknown kind");
}

bool complex_close(std::complex<double> a, std::complex<double> b, double eps) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= eps * scale;
}

// ---- integer action ----------------------------------------------------------

RingElem int_scale(const mpz_class& n, const RingElem& a) {
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::BigRational: return RingElem(r, mpq_class(n * a.rat()));
    case RingKind::BigInteger: return RingElem(r, mpz_class(n * a.whole()));
    case RingKind::Modular: {
      std::uint64_t k = mpz_fdiv_ui(n.get_mpz_t(), r.modulus());
      return RingElem(r, mulm(k, a.residue(), r.modulus()));
    }
    case RingKind::ComplexFloat: return RingElem(r, n.get_d() * a.cplx());
    case RingKind::Polynomial: {
      PolyTerms out;
      for (const auto& [m, c] : a.terms()) {
        RingElem s = int_scale(n, c);
        if (!is_zero(s)) out.emplace(m, std::move(s));
      }
      return RingElem(r, std::move(out));
    }
  }
  throw Error("int_scale: unknown kind");
}

RingElem int_scale(long n, const RingElem& a) { return int_scale(mpz_class(n), a); }

RingElem int_divide(const RingElem& a, const mpz_class& n) {
  if (sgn(n) == 0) throw Error("int_divide: division by zero");
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::BigRational: {
      mpq_class q = a.rat() / mpq_class(n);
      return RingElem(r, std::move(q));
    }
    case RingKind::ComplexFloat: return RingElem(r, a.cplx() / n.get_d());
    case RingKind::Polynomial: {
      if (!r.is_q_algebra()) throw NotQAlgebraError("int_divide");
      PolyTerms out;
      for (const auto& [m, c] : a.terms()) out.emplace(m, int_divide(c, n));
      return RingElem(r, std::move(out));
    }
    default:
      throw NotQAlgebraError("int_divide");
  }
}

RingElem int_divide(const RingElem& a, long n) { return int_divide(a, mpz_class(n)); }

std::optional<RingElem> try_invert(const RingElem& a) {
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::BigRational: {
      if (sgn(a.rat()) == 0) return std::nullopt;
      return RingElem(r, mpq_class(1 / a.rat()));
    }
    case RingKind::BigInteger: {
      if (a.whole() == 1 || a.whole() == -1) return a;
      return std::nullopt;
    }
    case RingKind::Modular: {
      mpz_class v(static_cast<unsigned long>(a.residue())), m(static_cast<unsigned long>(r.modulus())), inv;
      if (mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
      return RingElem(r, static_cast<std::uint64_t>(inv.get_ui()));
    }
    case RingKind::ComplexFloat: {
      if (is_zero(a)) return std::nullopt;
      return RingElem(r, 1.0 / a.cplx());
    }
    case RingKind::Polynomial: {
      // only constants are inverted here; nonconstant units (possible over
      // rings with nilpotents, e.g. Z/4) are reported as non-invertible
      const auto& t = a.terms();
      if (t.size() != 1) return std::nullopt;
      const auto& [m, c] = *t.begin();
      if (std::any_of(m.begin(), m.end(), [](std::uint32_t e) { return e != 0; }))
        return std::nullopt;
      auto ci = try_invert(c);
      if (!ci) return std::nullopt;
      PolyTerms out;
      out.emplace(m, std::move(*ci));
      return RingElem(r, std::move(out));
    }
  }
  throw Error("try_invert: unknown kind");
}

RingElem elem_pow(const RingElem& a, unsigned e) {
  RingElem acc = ring_one(a.ring());
  RingElem base = a;
  while (e) {
    if (e & 1u) acc = acc * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return acc;
}

// Collects gcd(m, every scalar coefficient) through nested polynomial layers.
static std::uint64_t content_gcd_mod(const RingElem& a, std::uint64_t m, std::uint64_t acc) {
  if (a.ring().kind() == RingKind::Modular) return std::gcd(acc, a.residue() % m);
  for (const auto& [mono, c] : a.terms()) acc = content_gcd_mod(c, m, acc);
  return acc;
}

bool is_zero_or_zero_divisor(const RingElem& a) {
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::BigRational:
    case RingKind::BigInteger:
    case RingKind::ComplexFloat:
      return is_zero(a);
    case RingKind::Modular: {
      std::uint64_t v = a.residue();
      return v == 0 || std::gcd(v, r.modulus()) != 1;
    }
    case RingKind::Polynomial: {
      if (is_zero(a)) return true;
      // locate the bottom scalar ring; over a domain a nonzero polynomial is
      // regular, over Z/m McCoy's theorem reduces to a content gcd test
      Ring b = r.base();
      while (b.kind() == RingKind::Polynomial) b = b.base();
      if (b.kind() != RingKind::Modular) return false;
      std::uint64_t g = content_gcd_mod(a, b.modulus(), 0);
      return std::gcd(g, b.modulus()) != 1;
    }
  }
  throw Error("is_zero_or_zero_divisor: unknown kind");
}

// ---- text encodings ----------------------------------------------------------

static bool needs_parens(const std::string& s) {
  // bracketed complex values are self-delimiting
  if (!s.empty() && s.front() == '[') return false;
  return s.find_first_of(" +-") != std::string::npos;
}

static std::string poly_to_text(const RingElem& a) {
  const auto& vars = a.ring().vars();
  if (a.terms().empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    std::string coeff = to_text(c);
    bool neg = !coeff.empty() && coeff[0] == '-' && coeff.find_first_of(" +", 1) == std::string::npos;
    std::string mag = neg ? coeff.substr(1) : coeff;
    std::string monos;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (m[i] == 0) continue;
      if (!monos.empty()) monos += "*";
      monos += vars[i];
      if (m[i] > 1) monos += "^" + std::to_string(m[i]);
    }
    std::string term;
    if (monos.empty()) {
      term = needs_parens(mag) ? "(" + mag + ")" : mag;
    } else if (mag == "1") {
      term = monos;
    } else {
      term = (needs_parens(mag) ? "(" + mag + ")" : mag) + "*" + monos;
    }
    if (first) {
      out = (neg ? "-" : "") + term;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

std::string to_text(const RingElem& a) {
  switch (a.ring().kind()) {
    case RingKind::BigRational: return a.rat().get_str();
    case RingKind::BigInteger: return a.whole().get_str();
    case RingKind::Modular:
      return std::to_string(a.residue()) + " mod " + std::to_string(a.ring().modulus());
    case RingKind::ComplexFloat: {
      auto z = a.cplx();
      return "[" + fmt_double(z.real()) + ", " + fmt_double(z.imag()) + "]";
    }
    case RingKind::Polynomial: return poly_to_text(a);
  }
  throw Error("to_text: unknown kind");
}

// ---- parsing -----------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view s, const char* what) {
  s = trim(s);
  std::string buf(s);
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || buf.empty() || errno == ERANGE)
    throw ParseError(std::string("bad ") + what + " '" + buf + "'", 1);
  return v;
}

mpq_class parse_rational_text(std::string_view s) {
  s = trim(s);
  std::string buf(s);
  mpq_class q;
  if (buf.empty() || mpq_set_str(q.get_mpq_t(), buf.c_str(), 10) != 0)
    throw ParseError("bad rational '" + buf + "'", 1);
  if (sgn(mpq_class(q.get_den())) == 0) throw ParseError("zero denominator in '" + buf + "'", 1);
  q.canonicalize();
  return q;
}

// Splits a polynomial body into signed terms at depth-zero +/-. A sign that
// is part of a float exponent (as in 1e-3) is not a separator.
std::vector<std::pair<int, std::string>> split_terms(std::string_view s) {
  std::vector<std::pair<int, std::string>> out;
  int depth = 0, sign = 1;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') depth++;
    if (c == ')' || c == ']') depth--;
    bool exponent_sign = (c == '+' || c == '-') && i >= 2 && (s[i - 1] == 'e' || s[i - 1] == 'E') &&
                         std::isdigit(static_cast<unsigned char>(s[i - 2]));
    if (depth == 0 && (c == '+' || c == '-') && !exponent_sign) {
      std::string t(trim(cur));
      if (t.empty()) {
        // leading or repeated sign folds into the pending sign
        if (c == '-') sign = -sign;
      } else {
        out.emplace_back(sign, t);
        sign = (c == '-') ? -1 : 1;
      }
      cur.clear();
    } else {
      cur += c;
    }
  }
  std::string t(trim(cur));
  if (!t.empty())
    out.emplace_back(sign, t);
  else if (out.empty())
    throw ParseError("empty polynomial body", 1);
  return out;
}

std::vector<std::string> split_factors(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') depth++;
    if (c == ')' || c == ']') depth--;
    if (depth == 0 && c == '*') {
      out.emplace_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.emplace_back(trim(cur));
  return out;
}

}  // namespace

RingElem parse_elem(const Ring& r, std::string_view text) {
  auto s = trim(text);
  if (s.empty()) throw ParseError("empty ring element", 1);
  switch (r.kind()) {
    case RingKind::BigRational: return RingElem(r, parse_rational_text(s));
    case RingKind::BigInteger: {
      std::string buf(s);
      mpz_class z;
      if (mpz_set_str(z.get_mpz_t(), buf.c_str(), 10) != 0)
        throw ParseError("bad integer '" + buf + "'", 1);
      return RingElem(r, std::move(z));
    }
    case RingKind::Modular: {
      std::string buf(s);
      auto pos = buf.find(" mod ");
      std::string num = pos == std::string::npos ? buf : buf.substr(0, pos);
      if (pos != std::string::npos) {
        std::string mm(trim(std::string_view(buf).substr(pos + 5)));
        if (mm != std::to_string(r.modulus()))
          throw ParseError("modulus mismatch in '" + buf + "'", 1);
      }
      mpz_class z;
      std::string nn(trim(num));
      if (nn.empty() || mpz_set_str(z.get_mpz_t(), nn.c_str(), 10) != 0)
        throw ParseError("bad residue '" + buf + "'", 1);
      return from_int(r, z);
    }
    case RingKind::ComplexFloat: {
      if (s.front() == '[') {
        if (s.back() != ']') throw ParseError("unterminated complex literal", s.size());
        auto body = s.substr(1, s.size() - 2);
        auto comma = body.find(',');
        if (comma == std::string_view::npos) throw ParseError("complex literal needs re, im", 1);
        double re = parse_double(body.substr(0, comma), "real part");
        double im = parse_double(body.substr(comma + 1), "imaginary part");
        return RingElem(r, std::complex<double>(re, im));
      }
      // bare reals and rationals embed on the real axis
      if (s.find('/') != std::string_view::npos)
        return RingElem(r, std::complex<double>(parse_rational_text(s).get_d(), 0.0));
      return RingElem(r, std::complex<double>(parse_double(s, "real value"), 0.0));
    }
    case RingKind::Polynomial: {
      RingElem acc = ring_zero(r);
      for (auto& [sign, term] : split_terms(s)) {
        Monomial mono(r.vars().size(), 0);
        RingElem coeff = ring_one(r.base());
        for (auto& f : split_factors(term)) {
          if (f.empty()) throw ParseError("empty factor in '" + term + "'", 1);
          std::string name = f;
          std::uint32_t exp = 1;
          if (auto caret = f.find('^'); caret != std::string::npos && f.front() != '(' && f.front() != '[') {
            name = std::string(trim(std::string_view(f).substr(0, caret)));
            auto es = trim(std::string_view(f).substr(caret + 1));
            exp = 0;
            auto res = std::from_chars(es.data(), es.data() + es.size(), exp);
            if (res.ec != std::errc() || res.ptr != es.data() + es.size())
              throw ParseError("bad exponent in '" + f + "'", 1);
          }
          const auto& vars = r.vars();
          auto vi = std::find(vars.begin(), vars.end(), name);
          if (vi != vars.end()) {
            mono[static_cast<std::size_t>(vi - vars.begin())] += exp;
          } else {
            std::string lit = f;
            if (lit.size() >= 2 && lit.front() == '(' && lit.back() == ')')
              lit = lit.substr(1, lit.size() - 2);
            coeff = coeff * parse_elem(r.base(), lit);
          }
        }
        if (sign < 0) coeff = ring_neg(coeff);
        acc = ring_add(acc, poly_term(r, std::move(mono), std::move(coeff)));
      }
      return acc;
    }
  }
  throw Error("parse_elem: unknown kind");
}

int mobius(std::uint64_t n) {
  if (n == 0) throw Error("mobius: undefined at 0");
  int factors = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++factors;
    }
  }
  if (n > 1) ++factors;
  return factors % 2 == 0 ? 1 : -1;
}

}  // namespace ene
