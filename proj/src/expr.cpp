#include "ene/expr.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <utility>
#include <vector>

#include "ene/product.hpp"
#include "ene/transforms.hpp"

namespace ene {

namespace {

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// A lone X names the series variable; X followed by more identifier
// characters is the start of some unknown name and must not be split.
bool plain_x_at(const std::string& s, std::size_t p) {
  if (p >= s.size() || s[p] != 'X') return false;
  return p + 1 >= s.size() || !is_ident_char(s[p + 1]);
}

struct Parser {
  const std::string& in;
  Ring ring;
  int order;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, at + 1);
  }

  void ws() {
    while (pos < in.size() && std::isspace(static_cast<unsigned char>(in[pos]))) ++pos;
  }

  char peek() {
    ws();
    return pos < in.size() ? in[pos] : '\0';
  }

  void expect(char c, const char* what) {
    if (peek() != c) fail(std::string("expected '") + c + "' " + what, pos);
    ++pos;
  }

  // ---- small token scanners -------------------------------------------------

  // number := digits [. digits] [e[+-]digits] | digits / digits (no spaces)
  // Returned as raw text for parse_elem, which knows the ring's formats.
  std::string scan_number() {
    std::size_t start = pos;
    bool any = false;
    while (pos < in.size() && std::isdigit(static_cast<unsigned char>(in[pos]))) ++pos, any = true;
    if (pos < in.size() && in[pos] == '.') {
      ++pos;
      while (pos < in.size() && std::isdigit(static_cast<unsigned char>(in[pos]))) ++pos, any = true;
    }
    if (!any) fail("expected a number", start);
    if (pos < in.size() && (in[pos] == 'e' || in[pos] == 'E')) {
      std::size_t q = pos + 1;
      if (q < in.size() && (in[q] == '+' || in[q] == '-')) ++q;
      if (q < in.size() && std::isdigit(static_cast<unsigned char>(in[q]))) {
        pos = q;
        while (pos < in.size() && std::isdigit(static_cast<unsigned char>(in[pos]))) ++pos;
      }
    }
    // a tightly bound slash makes a rational literal; spaced slash divides
    if (pos < in.size() && in[pos] == '/' && pos + 1 < in.size() &&
        std::isdigit(static_cast<unsigned char>(in[pos + 1]))) {
      ++pos;
      while (pos < in.size() && std::isdigit(static_cast<unsigned char>(in[pos]))) ++pos;
    }
    return in.substr(start, pos - start);
  }

  std::string scan_bracket() {
    std::size_t start = pos;  // at '['
    ++pos;
    while (pos < in.size() && in[pos] != ']') ++pos;
    if (pos >= in.size()) fail("unterminated '['", start);
    ++pos;
    return in.substr(start, pos - start);
  }

  RingElem coeff_from_text(const std::string& text, std::size_t at) {
    try {
      return parse_elem(ring, text);
    } catch (const ParseError& e) {
      fail(std::string("bad coefficient '") + text + "' for ring " + ring.name(), at);
    }
  }

  long scan_int_arg(const char* op) {
    ws();
    expect('(', (std::string("after ") + op).c_str());
    ws();
    std::size_t start = pos;
    bool negated = false;
    if (pos < in.size() && in[pos] == '-') negated = true, ++pos;
    std::size_t d0 = pos;
    while (pos < in.size() && std::isdigit(static_cast<unsigned char>(in[pos]))) ++pos;
    if (pos == d0) fail(std::string(op) + " needs an integer argument", start);
    long v = 0;
    auto res = std::from_chars(in.data() + d0, in.data() + pos, v);
    if (res.ec != std::errc()) fail(std::string(op) + " argument out of range", start);
    expect(')', (std::string("after ") + op + " argument").c_str());
    return negated ? -v : v;
  }

  // ---- grammar levels, loosest first ---------------------------------------

  Series parse_all() {
    Series v = expr();
    ws();
    if (pos < in.size()) fail("unexpected input", pos);
    return v;
  }

  Series expr() {
    Series v = ene_level();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos;
        v = mul(v, ene_level());
      } else if (c == '/') {
        ++pos;
        std::size_t oppos = pos - 1;
        Series d = ene_level();
        v = mul(v, series_invert(as_unit(d, "/", oppos)).series());
      } else {
        break;
      }
    }
    return v;
  }

  Series ene_level() {
    Series v = power_level();
    while (peek() == '@') {
      std::size_t oppos = pos;
      ++pos;
      Series w = power_level();
      v = ene(as_unit(v, "@", oppos), as_unit(w, "@", oppos)).series();
    }
    return v;
  }

  Series power_level() {
    Series v = postfix_level();
    while (peek() == '^') {
      std::size_t oppos = pos;
      ++pos;
      RingElem a = scalar_exponent();
      v = fractional_power(as_unit(v, "^", oppos), a).series();
    }
    return v;
  }

  RingElem scalar_exponent() {
    ws();
    if (pos >= in.size()) fail("expected a scalar exponent", pos);
    std::size_t start = pos;
    if (in[pos] == '(') {
      ++pos;
      int depth = 1;
      std::size_t body = pos;
      while (pos < in.size() && depth > 0) {
        if (in[pos] == '(') ++depth;
        if (in[pos] == ')') --depth;
        ++pos;
      }
      if (depth != 0) fail("unterminated '(' in exponent", start);
      return coeff_from_text(in.substr(body, pos - 1 - body), start);
    }
    if (in[pos] == '[') return coeff_from_text(scan_bracket(), start);
    std::string text;
    if (in[pos] == '+' || in[pos] == '-') text += in[pos], ++pos;
    text += scan_number();
    return coeff_from_text(text, start);
  }

  Series postfix_level() {
    Series v = primary();
    for (;;) {
      ws();
      std::size_t save = pos;
      if (pos >= in.size() || !std::isalpha(static_cast<unsigned char>(in[pos]))) break;
      std::size_t istart = pos;
      while (pos < in.size() && is_ident_char(in[pos])) ++pos;
      std::string name = in.substr(istart, pos - istart);
      if (name == "T") {
        long n = scan_int_arg("T");
        v = hecke(static_cast<int>(n), as_unit(v, "T", istart)).series();
      } else if (name == "Te") {
        long n = scan_int_arg("Te");
        if (n < 0) fail("Te needs a nonnegative truncation order", istart);
        v = exp_truncate(as_unit(v, "Te", istart), static_cast<int>(n)).series();
      } else if (name == "D") {
        v = log_derivative(as_unit(v, "D", istart));
      } else if (name == "INV") {
        v = ene_inverse(as_unit(v, "INV", istart)).series();
      } else {
        pos = save;
        break;
      }
    }
    return v;
  }

  Series primary() {
    ws();
    if (pos >= in.size()) fail("expected an expression", pos);
    char c = in[pos];
    if (c == '(') {
      std::size_t open = pos;
      ++pos;
      Series v = expr();
      if (peek() != ')') fail("unterminated '('", open);
      ++pos;
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) && !plain_x_at(in, pos)) return builtin();
    return literal();
  }

  Series builtin() {
    std::size_t start = pos;
    while (pos < in.size() && is_ident_char(in[pos])) ++pos;
    std::string name = in.substr(start, pos - start);
    if (name == "E") {
      long n = scan_int_arg("E");
      if (n < 0) fail("E needs a nonnegative index", start);
      return weierstrass_factor(static_cast<int>(n), order, ring).series();
    }
    if (name == "I") {
      long n = scan_int_arg("I");
      return cyclotomic_like(static_cast<int>(n), order, ring).series();
    }
    if (name == "AH") {
      long p = scan_int_arg("AH");
      return artin_hasse(p, order, ring).series();
    }
    if (name == "KOEBE") return koebe(ring, order);
    if (name == "UNIT") return weierstrass_factor(0, order, ring).series();
    if (name == "ZERO") return UnitSeries::one(ring, order).series();
    if (name == "EXP") return exp_builtin(start);
    fail("unknown name '" + name + "'", start);
  }

  // EXP(aX^n): one exponential monomial. The argument is split at its X, the
  // left part (with an optional trailing *) is a ring element, the right part
  // an optional ^n.
  Series exp_builtin(std::size_t at) {
    ws();
    expect('(', "after EXP");
    std::size_t body = pos;
    int paren = 1, brack = 0;
    while (pos < in.size()) {
      char c = in[pos];
      if (c == '[') ++brack;
      if (c == ']') --brack;
      if (brack == 0 && c == '(') ++paren;
      if (brack == 0 && c == ')' && --paren == 0) break;
      ++pos;
    }
    if (paren != 0) fail("unterminated '(' after EXP", at);
    std::string inner = in.substr(body, pos - body);
    ++pos;  // closing ')'

    std::size_t xk = std::string::npos;
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '[' || inner[i] == '(') ++depth;
      if (inner[i] == ']' || inner[i] == ')') --depth;
      if (depth == 0 && plain_x_at(inner, i)) {
        xk = i;
        break;
      }
    }
    if (xk == std::string::npos) fail("EXP argument must have the form a*X^n", body);

    auto trim = [](std::string s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
      return s;
    };
    std::string left = trim(inner.substr(0, xk));
    if (!left.empty() && left.back() == '*') left = trim(left.substr(0, left.size() - 1));
    RingElem a = left.empty() || left == "+" ? ring_one(ring)
                 : left == "-"               ? ring_neg(ring_one(ring))
                                             : coeff_from_text(left, body);

    std::string right = trim(inner.substr(xk + 1));
    long n = 1;
    if (!right.empty()) {
      if (right.front() != '^') fail("EXP argument must have the form a*X^n", body);
      right = trim(right.substr(1));
      auto res = std::from_chars(right.data(), right.data() + right.size(), n);
      if (res.ec != std::errc() || res.ptr != right.data() + right.size() || n < 1)
        fail("EXP exponent must be a positive integer", body);
    }

    ExpForm F(ring, order);
    if (n <= order) F.set_f(static_cast<int>(n), a);
    return series_exp(F).series();
  }

  // literal := [sign] term ((+|-) term)*
  // term    := coeff [[*] X [^k]] | X [^k]
  Series literal() {
    std::vector<RingElem> acc(static_cast<std::size_t>(order) + 1, ring_zero(ring));
    ws();
    bool minus = false;
    if (pos < in.size() && (in[pos] == '+' || in[pos] == '-')) minus = in[pos] == '-', ++pos;
    for (;;) {
      auto [coeff, exp] = term();
      if (exp <= order) {
        auto& slot = acc[static_cast<std::size_t>(exp)];
        slot = minus ? ring_sub(slot, coeff) : ring_add(slot, coeff);
      }
      ws();
      if (pos < in.size() && (in[pos] == '+' || in[pos] == '-')) {
        minus = in[pos] == '-';
        ++pos;
      } else {
        break;
      }
    }
    return Series(ring, order, std::move(acc));
  }

  std::pair<RingElem, int> term() {
    ws();
    if (pos >= in.size()) fail("expected a term", pos);
    std::size_t start = pos;
    RingElem coeff = ring_one(ring);
    bool have_coeff = false;
    char c = in[pos];
    if (c == '[') {
      coeff = coeff_from_text(scan_bracket(), start);
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      coeff = coeff_from_text(scan_number(), start);
      have_coeff = true;
    }
    if (have_coeff) {
      // a * that is followed by a lone X stays inside the literal
      std::size_t save = pos;
      ws();
      if (pos < in.size() && in[pos] == '*') {
        std::size_t q = pos + 1;
        while (q < in.size() && std::isspace(static_cast<unsigned char>(in[q]))) ++q;
        if (plain_x_at(in, q))
          pos = q;
        else
          pos = save;
      } else if (!plain_x_at(in, pos)) {
        pos = save;
      }
    }
    if (plain_x_at(in, pos)) {
      ++pos;
      int exp = 1;
      std::size_t save = pos;
      ws();
      if (pos < in.size() && in[pos] == '^') {
        ++pos;
        ws();
        std::size_t d0 = pos;
        while (pos < in.size() && std::isdigit(static_cast<unsigned char>(in[pos]))) ++pos;
        if (pos == d0) fail("X exponent must be a nonnegative integer", d0);
        auto res = std::from_chars(in.data() + d0, in.data() + pos, exp);
        if (res.ec != std::errc()) fail("X exponent out of range", d0);
      } else {
        pos = save;
      }
      return {std::move(coeff), exp};
    }
    if (!have_coeff) fail("expected a term", start);
    return {std::move(coeff), 0};
  }

  UnitSeries as_unit(const Series& v, const char* op, std::size_t at) {
    if (!ring_equal(v.coeff(0), ring_one(ring)))
      fail(std::string(op) + " needs an operand with constant term 1", at);
    return UnitSeries(v);
  }
};

}  // namespace

Series eval_expr(const std::string& text, const Ring& r, int order) {
  if (order < 0) throw Error("eval_expr: order must be nonnegative");
  Parser p{text, r, order};
  return p.parse_all();
}

int literal_order_bound(const std::string& text) {
  int best = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!plain_x_at(text, i)) continue;
    std::size_t q = i + 1;
    while (q < text.size() && std::isspace(static_cast<unsigned char>(text[q]))) ++q;
    if (q >= text.size() || text[q] != '^') continue;
    ++q;
    while (q < text.size() && std::isspace(static_cast<unsigned char>(text[q]))) ++q;
    std::size_t d0 = q;
    while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]))) ++q;
    if (q > d0) {
      int e = 0;
      auto res = std::from_chars(text.data() + d0, text.data() + q, e);
      if (res.ec == std::errc() && e > best) best = e;
    }
  }
  return best;
}

const char* const kGrammarText = R"(expression grammar (loosest binding first):

  expr    := ene (('*' | '/') ene)*          series product and division
  ene     := power ('@' power)*              the second ring product
  power   := postfix ('^' scalar)*           fractional power, Q-algebras
  postfix := primary (op)*                   op one of:
               T(n)    index-n Hecke operator (order shrinks to floor(N/n))
               Te(N)   truncate exponential coordinates above N
               D       logarithmic derivative f'/f (order drops by one)
               INV     inverse for '@' (so f INV @ f = UNIT)
  primary := '(' expr ')' | builtin | literal

  builtin := E(N)      exp(-sum_{k>N} X^k/k); E(0) = 1 - X on any ring
           | I(N)      1 - X^N
           | AH(p)     exp(sum_{k>=0} X^{p^k}/p^k), p prime
           | KOEBE     sum_{n>=1} n X^n, the coefficientwise-product unit on tails
           | UNIT      1 - X, the identity for '@'
           | ZERO      1, the zero for '@'
           | EXP(aX^n) exp(a X^n); a is a ring element, n >= 1

  literal := [sign] term (('+' | '-') term)*
  term    := coeff [['*'] X ['^' k]] | X ['^' k]
  coeff   := number | p/q (no spaces) | [re, im]   as the ring allows

  scalar  := signed number | '(' ring element ')' | [re, im]

Numbers may use decimals and e-notation where the ring supports them.
A '/' written tightly between digits is a rational coefficient; a spaced
'/' divides series. Everything is truncated at the --order in force.

examples:
  (1 - 2*X) @ (1 - 3*X)          ->  1 - 6*X + ...
  E(2) @ E(3)                    ->  E(3)
  EXP(X) T(2)                    ->  EXP(2*X) at half the order
  (1 - X - X^2) INV @ (1 - X - X^2)  ->  1 - X
)";

}  // namespace ene
