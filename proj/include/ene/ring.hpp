#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "ene/errors.hpp"

namespace ene {

// Supported coefficient rings. All are commutative with 1. Exact kinds
// compare exactly; complex-float compares within a relative epsilon carried
// by the ring descriptor.
enum class RingKind {
  BigRational,   // Q, arbitrary precision
  BigInteger,    // Z, arbitrary precision
  Modular,       // Z/m, m >= 2, composite allowed (zero divisors)
  ComplexFloat,  // C as double pairs with tolerance-based equality
  Polynomial,    // multivariate polynomials over a base ring, named variables
};

// Immutable ring descriptor. Cheap to copy (shared node). Two descriptors
// are equal when kind and parameters agree structurally.
class Ring {
 public:
  static Ring rationals();
  static Ring integers();
  // Requires 2 <= m < 2^62 so that products fit an __int128 reduction.
  static Ring modular(std::uint64_t m);
  static Ring complexes(double eps = 1e-9);
  static Ring polynomials(Ring base, std::vector<std::string> vars);

  RingKind kind() const noexcept;
  // True when integer division is total: Q, C, and polynomials over such.
  bool is_q_algebra() const noexcept;
  std::uint64_t modulus() const;                 // Modular only
  double epsilon() const;                        // ComplexFloat only
  const Ring& base() const;                      // Polynomial only
  const std::vector<std::string>& vars() const;  // Polynomial only

  // Short human-readable descriptor, e.g. "Q", "Z/7", "C(eps=1e-09)".
  std::string name() const;

  friend bool operator==(const Ring& a, const Ring& b);
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

 private:
  struct Node;
  explicit Ring(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Exponent vector, one entry per ring variable, in declaration order.
using Monomial = std::vector<std::uint32_t>;

// Term order used for stored polynomials and canonical printing: total
// degree descending, ties broken lexicographically descending in declaration
// order. map::begin() is therefore the leading term.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class RingElem;
using PolyTerms = std::map<Monomial, RingElem, MonomialOrder>;

// One element of a specific ring. Value-semantic; carries its descriptor so
// mixed-ring arithmetic can be rejected at run time.
class RingElem {
 public:
  RingElem(Ring r, mpq_class v);
  RingElem(Ring r, mpz_class v);
  RingElem(Ring r, std::uint64_t v);
  RingElem(Ring r, std::complex<double> v);
  RingElem(Ring r, PolyTerms v);

  const Ring& ring() const noexcept { return ring_; }

  const mpq_class& rat() const;
  const mpz_class& whole() const;
  std::uint64_t residue() const;
  std::complex<double> cplx() const;
  const PolyTerms& terms() const;

 private:
  Ring ring_;
  std::variant<mpq_class, mpz_class, std::uint64_t, std::complex<double>,
               std::shared_ptr<const PolyTerms>>
      v_;
};

RingElem ring_zero(const Ring& r);
RingElem ring_one(const Ring& r);
RingElem from_int(const Ring& r, long n);
RingElem from_int(const Ring& r, const mpz_class& n);
RingElem from_rational(const Ring& r, const mpq_class& q);  // Q-algebras only
// The idx-th variable of a polynomial ring as an element.
RingElem poly_var(const Ring& r, std::size_t idx);
RingElem poly_term(const Ring& r, Monomial m, RingElem coeff);

RingElem ring_add(const RingElem& a, const RingElem& b);
RingElem ring_sub(const RingElem& a, const RingElem& b);
RingElem ring_mul(const RingElem& a, const RingElem& b);
RingElem ring_neg(const RingElem& a);

inline RingElem operator+(const RingElem& a, const RingElem& b) { return ring_add(a, b); }
inline RingElem operator-(const RingElem& a, const RingElem& b) { return ring_sub(a, b); }
inline RingElem operator*(const RingElem& a, const RingElem& b) { return ring_mul(a, b); }
inline RingElem operator-(const RingElem& a) { return ring_neg(a); }

bool is_zero(const RingElem& a);
bool ring_equal(const RingElem& a, const RingElem& b);
inline bool operator==(const RingElem& a, const RingElem& b) { return ring_equal(a, b); }
inline bool operator!=(const RingElem& a, const RingElem& b) { return !ring_equal(a, b); }

// n . a under repeated-addition semantics, any ring.
RingElem int_scale(const mpz_class& n, const RingElem& a);
RingElem int_scale(long n, const RingElem& a);
// a / n for nonzero integer n; throws NotQAlgebraError on Z and Z/m.
RingElem int_divide(const RingElem& a, const mpz_class& n);
RingElem int_divide(const RingElem& a, long n);

// Multiplicative inverse when one exists in the ring, nullopt otherwise.
std::optional<RingElem> try_invert(const RingElem& a);
RingElem elem_pow(const RingElem& a, unsigned e);

// True when a is 0 or annihilated by some nonzero ring element. Exact for
// every supported kind (McCoy gcd test for polynomials over Z/m).
bool is_zero_or_zero_divisor(const RingElem& a);

// Text encodings, round-trippable through parse_elem:
//   rational "p/q" (integers bare), integer "n", modular "k mod m",
//   complex "[re, im]", polynomial canonical sum like "3*x^2*y - 2*z".
std::string to_text(const RingElem& a);
RingElem parse_elem(const Ring& r, std::string_view text);

// Moebius function on positive integers by factorization.
int mobius(std::uint64_t n);

// Tolerance-based comparison used by the complex-float kind.
bool complex_close(std::complex<double> a, std::complex<double> b, double eps);

}  // namespace ene
