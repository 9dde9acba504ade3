#include "ene/qpoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "ene/product.hpp"

namespace ene {

namespace {

// Significance X_p > ... > X_1 > Y_p > ... > Y_1, larger exponents first.
// This is the order the source formulas are printed in.
bool term_before(const UnivTerm& s, const UnivTerm& t) {
  const std::size_t p = s.xexp.size();
  for (std::size_t i = p; i-- > 0;) {
    if (s.xexp[i] != t.xexp[i]) return s.xexp[i] > t.xexp[i];
  }
  for (std::size_t i = p; i-- > 0;) {
    if (s.yexp[i] != t.yexp[i]) return s.yexp[i] > t.yexp[i];
  }
  return false;
}

std::string monomial_text(const UnivTerm& t) {
  std::string out;
  auto block = [&out](const Monomial& e, char letter) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += letter + std::to_string(i + 1);
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  };
  block(t.xexp, 'X');
  block(t.yexp, 'Y');
  return out;
}

unsigned long weighted_degree(const Monomial& e) {
  unsigned long w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) w += (i + 1) * e[i];
  return w;
}

}  // namespace

void UnivPoly::sort_and_check() {
  std::sort(terms_.begin(), terms_.end(), term_before);
  const unsigned long p = static_cast<unsigned long>(p_);
  bool saw_corner = false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (t.xexp.size() != static_cast<std::size_t>(p_) || t.yexp.size() != static_cast<std::size_t>(p_))
      throw Error("UnivPoly: exponent arity mismatch");
    if (sgn(t.coeff) == 0) throw Error("UnivPoly: zero coefficient stored");
    if (i > 0 && !term_before(terms_[i - 1], t)) throw Error("UnivPoly: duplicate monomial");
    if (weighted_degree(t.xexp) != p || weighted_degree(t.yexp) != p)
      throw Error("UnivPoly: monomial is not bi-weight homogeneous");
    bool has_xp = t.xexp[p_ - 1] > 0, has_yp = t.yexp[p_ - 1] > 0;
    if (has_xp && has_yp) {
      // only the X_p Y_p corner term may touch both top variables, with
      // coefficient (-1)^p * (-p)
      mpz_class want = (p_ % 2 == 0) ? mpz_class(-p_) : mpz_class(p_);
      if (saw_corner || weighted_degree(t.xexp) != p || t.coeff != want)
        throw Error("UnivPoly: bad X_p Y_p corner term");
      saw_corner = true;
    }
  }
  if (!saw_corner) throw Error("UnivPoly: missing X_p Y_p corner term");
}

std::string UnivPoly::canonical_text() const {
  std::string out;
  for (const auto& t : terms_) {
    mpz_class mag = abs(t.coeff);
    bool neg = sgn(t.coeff) < 0;
    std::string body = monomial_text(t);
    if (mag != 1) body = mag.get_str() + "*" + body;
    if (out.empty())
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

std::string UnivPoly::cache_text() const {
  std::string out = "p=" + std::to_string(p_) + "\n";
  for (const auto& t : terms_) out += t.coeff.get_str() + " " + monomial_text(t) + "\n";
  return out;
}

UnivPoly UnivPoly::from_cache_text(const std::string& body) {
  std::istringstream in(body);
  std::string line;
  if (!std::getline(in, line) || line.rfind("p=", 0) != 0)
    throw Error("UnivPoly cache: missing p= header");
  UnivPoly q;
  q.p_ = std::stoi(line.substr(2));
  if (q.p_ < 1) throw Error("UnivPoly cache: bad index");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto sp = line.find(' ');
    if (sp == std::string::npos) throw Error("UnivPoly cache: bad line '" + line + "'");
    UnivTerm t;
    t.coeff = mpz_class(line.substr(0, sp));
    t.xexp.assign(static_cast<std::size_t>(q.p_), 0);
    t.yexp.assign(static_cast<std::size_t>(q.p_), 0);
    std::istringstream ms(line.substr(sp + 1));
    std::string factor;
    while (std::getline(ms, factor, '*')) {
      if (factor.size() < 2 || (factor[0] != 'X' && factor[0] != 'Y'))
        throw Error("UnivPoly cache: bad factor '" + factor + "'");
      std::uint32_t exp = 1;
      std::string idx = factor.substr(1);
      if (auto caret = idx.find('^'); caret != std::string::npos) {
        exp = static_cast<std::uint32_t>(std::stoul(idx.substr(caret + 1)));
        idx = idx.substr(0, caret);
      }
      int vi = std::stoi(idx);
      if (vi < 1 || vi > q.p_) throw Error("UnivPoly cache: variable index out of range");
      (factor[0] == 'X' ? t.xexp : t.yexp)[static_cast<std::size_t>(vi - 1)] += exp;
    }
    q.terms_.push_back(std::move(t));
  }
  q.sort_and_check();
  return q;
}

namespace {

inline std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// shared shape of the kind-specialized evaluation loops; Coeff maps the
// integer term coefficient into T
template <typename T, typename Coeff>
T eval_plain(const std::vector<UnivTerm>& terms, int p, const std::vector<T>& a,
             const std::vector<T>& b, Coeff coeff) {
  auto powers = [p](const std::vector<T>& v) {
    std::vector<std::vector<T>> pw(static_cast<std::size_t>(p));
    for (int i = 1; i <= p; ++i) {
      auto& row = pw[static_cast<std::size_t>(i - 1)];
      row.push_back(T(1));
      for (int e = 1; e * i <= p; ++e) row.push_back(row.back() * v[static_cast<std::size_t>(i - 1)]);
    }
    return pw;
  };
  auto pa = powers(a), pb = powers(b);
  T acc(0), m(0);
  for (const auto& t : terms) {
    m = coeff(t.coeff);
    for (std::size_t i = 0; i < t.xexp.size(); ++i)
      if (t.xexp[i]) m *= pa[i][t.xexp[i]];
    for (std::size_t i = 0; i < t.yexp.size(); ++i)
      if (t.yexp[i]) m *= pb[i][t.yexp[i]];
    acc += m;
  }
  return acc;
}

std::uint64_t eval_modular(const std::vector<UnivTerm>& terms, int p, std::uint64_t mod,
                           const std::vector<std::uint64_t>& a,
                           const std::vector<std::uint64_t>& b) {
  auto powers = [p, mod](const std::vector<std::uint64_t>& v) {
    std::vector<std::vector<std::uint64_t>> pw(static_cast<std::size_t>(p));
    for (int i = 1; i <= p; ++i) {
      auto& row = pw[static_cast<std::size_t>(i - 1)];
      row.push_back(1 % mod);
      for (int e = 1; e * i <= p; ++e)
        row.push_back(mulm(row.back(), v[static_cast<std::size_t>(i - 1)], mod));
    }
    return pw;
  };
  auto pa = powers(a), pb = powers(b);
  std::uint64_t acc = 0;
  for (const auto& t : terms) {
    std::uint64_t m;
    if (t.coeff.fits_slong_p()) {
      long c = t.coeff.get_si() % static_cast<long>(mod);
      m = static_cast<std::uint64_t>(c < 0 ? c + static_cast<long>(mod) : c);
    } else {
      m = mpz_fdiv_ui(t.coeff.get_mpz_t(), mod);
    }
    for (std::size_t i = 0; i < t.xexp.size(); ++i)
      if (t.xexp[i]) m = mulm(m, pa[i][t.xexp[i]], mod);
    for (std::size_t i = 0; i < t.yexp.size(); ++i)
      if (t.yexp[i]) m = mulm(m, pb[i][t.yexp[i]], mod);
    acc = (acc + m) % mod;
  }
  return acc;
}

template <typename T, typename Get>
std::vector<T> first_p(const std::vector<RingElem>& v, int p, Get get) {
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) out.push_back(get(v[static_cast<std::size_t>(i)]));
  return out;
}

}  // namespace

RingElem UnivPoly::evaluate(const std::vector<RingElem>& a, const std::vector<RingElem>& b) const {
  if (a.size() < static_cast<std::size_t>(p_) || b.size() < static_cast<std::size_t>(p_))
    throw Error("UnivPoly::evaluate: need the first p coefficients");
  const Ring& r = a[0].ring();
  // the ene axiom and agreement suites evaluate these polynomials thousands
  // of times; unwrapping the numeric kinds pays for itself
  switch (r.kind()) {
    case RingKind::BigRational: {
      auto get = [](const RingElem& e) { return e.rat(); };
      return RingElem(r, eval_plain<mpq_class>(terms_, p_, first_p<mpq_class>(a, p_, get),
                                               first_p<mpq_class>(b, p_, get),
                                               [](const mpz_class& c) { return mpq_class(c); }));
    }
    case RingKind::BigInteger: {
      auto get = [](const RingElem& e) { return e.whole(); };
      return RingElem(r, eval_plain<mpz_class>(terms_, p_, first_p<mpz_class>(a, p_, get),
                                               first_p<mpz_class>(b, p_, get),
                                               [](const mpz_class& c) { return c; }));
    }
    case RingKind::Modular: {
      auto get = [](const RingElem& e) { return e.residue(); };
      return RingElem(r, eval_modular(terms_, p_, r.modulus(),
                                      first_p<std::uint64_t>(a, p_, get),
                                      first_p<std::uint64_t>(b, p_, get)));
    }
    case RingKind::ComplexFloat: {
      auto get = [](const RingElem& e) { return e.cplx(); };
      return RingElem(r, eval_plain<std::complex<double>>(
                             terms_, p_, first_p<std::complex<double>>(a, p_, get),
                             first_p<std::complex<double>>(b, p_, get),
                             [](const mpz_class& c) { return std::complex<double>(c.get_d()); }));
    }
    case RingKind::Polynomial:
      break;
  }
  // power tables; X_i can appear with exponent at most p/i by weight
  auto powers = [&r, this](const std::vector<RingElem>& v) {
    std::vector<std::vector<RingElem>> pw(static_cast<std::size_t>(p_));
    for (int i = 1; i <= p_; ++i) {
      auto& row = pw[static_cast<std::size_t>(i - 1)];
      row.push_back(ring_one(r));
      for (int e = 1; e * i <= p_; ++e) row.push_back(row.back() * v[static_cast<std::size_t>(i - 1)]);
    }
    return pw;
  };
  auto pa = powers(a), pb = powers(b);
  RingElem acc = ring_zero(r);
  for (const auto& t : terms_) {
    RingElem m = ring_one(r);
    for (std::size_t i = 0; i < t.xexp.size(); ++i)
      if (t.xexp[i]) m = m * pa[i][t.xexp[i]];
    for (std::size_t i = 0; i < t.yexp.size(); ++i)
      if (t.yexp[i]) m = m * pb[i][t.yexp[i]];
    acc = acc + int_scale(t.coeff, m);
  }
  return acc;
}

UnivPoly generate_univ_poly(int p) {
  if (p < 1) throw Error("generate_univ_poly: p must be >= 1");
  std::vector<std::string> vars;
  vars.reserve(2 * static_cast<std::size_t>(p));
  for (int i = 1; i <= p; ++i) vars.push_back("X" + std::to_string(i));
  for (int i = 1; i <= p; ++i) vars.push_back("Y" + std::to_string(i));
  Ring pr = Ring::polynomials(Ring::rationals(), vars);

  UnitSeries f = UnitSeries::one(pr, p), g = UnitSeries::one(pr, p);
  for (int i = 1; i <= p; ++i) {
    f.set_coeff(i, poly_var(pr, static_cast<std::size_t>(i - 1)));
    g.set_coeff(i, poly_var(pr, static_cast<std::size_t>(p + i - 1)));
  }
  RingElem cp = ene_exp(f, g).coeff(p);

  UnivPoly q;
  q.p_ = p;
  for (const auto& [mono, c] : cp.terms()) {
    const mpq_class& v = c.rat();
    if (v.get_den() != 1)
      throw Error("generate_univ_poly: non-integer coefficient at p=" + std::to_string(p));
    UnivTerm t;
    t.coeff = v.get_num();
    if (p % 2 != 0) t.coeff = -t.coeff;  // Q_p = (-1)^p c_p
    t.xexp.assign(mono.begin(), mono.begin() + p);
    t.yexp.assign(mono.begin() + p, mono.end());
    q.terms_.push_back(std::move(t));
  }
  q.sort_and_check();
  return q;
}

namespace {

std::filesystem::path cache_dir() {
  const char* env = std::getenv("ENE_CACHE_DIR");
  return std::filesystem::path(env && *env ? env : "./ene_cache");
}

std::filesystem::path cache_file(int p) {
  return cache_dir() / ("q" + std::to_string(p) + ".txt");
}

}  // namespace

const UnivPoly& universal_poly(int p) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const UnivPoly>> memo;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = memo.find(p); it != memo.end()) return *it->second;

  // disk cache is an optimization: unreadable or corrupt entries fall back
  // to generation and are rewritten
  try {
    std::ifstream in(cache_file(p));
    if (in) {
      std::stringstream body;
      body << in.rdbuf();
      UnivPoly q = UnivPoly::from_cache_text(body.str());
      if (q.index() == p) {
        auto [it, ok] = memo.emplace(p, std::make_unique<const UnivPoly>(std::move(q)));
        static_cast<void>(ok);
        return *it->second;
      }
    }
  } catch (const Error&) {
  }

  UnivPoly q = generate_univ_poly(p);
  try {
    std::filesystem::create_directories(cache_dir());
    auto tmp = cache_file(p);
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      out << q.cache_text();
    }
    std::filesystem::rename(tmp, cache_file(p));
  } catch (const std::exception&) {
    // persistence failure is not an evaluation failure
  }
  auto [it, ok] = memo.emplace(p, std::make_unique<const UnivPoly>(std::move(q)));
  static_cast<void>(ok);
  return *it->second;
}

}  // namespace ene
