#include "doctest.h"

#include <random>
#include <vector>

#include "ene/ring.hpp"

using namespace ene;

namespace {

RingElem rand_elem(const Ring& r, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> small(-9, 9);
  switch (r.kind()) {
    case RingKind::BigRational: {
      std::uniform_int_distribution<long> den(1, 9);
      return RingElem(r, mpq_class(small(rng), den(rng)));
    }
    case RingKind::BigInteger:
      return RingElem(r, mpz_class(small(rng)));
    case RingKind::Modular: {
      std::uniform_int_distribution<std::uint64_t> u(0, r.modulus() - 1);
      return RingElem(r, u(rng));
    }
    case RingKind::ComplexFloat: {
      std::uniform_real_distribution<double> d(-2.0, 2.0);
      return RingElem(r, std::complex<double>(d(rng), d(rng)));
    }
    case RingKind::Polynomial: {
      RingElem acc = from_int(r, small(rng));
      for (std::size_t i = 0; i < r.vars().size(); ++i)
        acc = acc + from_int(r, small(rng)) * poly_var(r, i);
      return acc;
    }
  }
  return ring_zero(r);
}

}  // namespace

TEST_CASE("commutative ring laws hold on random elements") {
  std::vector<Ring> rings = {Ring::rationals(), Ring::integers(), Ring::modular(7),
                             Ring::modular(6), Ring::complexes(),
                             Ring::polynomials(Ring::rationals(), {"x", "y"})};
  std::mt19937_64 rng(42);
  for (const Ring& r : rings) {
    CAPTURE(r.name());
    for (int t = 0; t < 25; ++t) {
      RingElem a = rand_elem(r, rng), b = rand_elem(r, rng), c = rand_elem(r, rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + ring_zero(r) == a);
      CHECK(a * ring_one(r) == a);
      CHECK(a - a == ring_zero(r));
      CHECK(a + (-a) == ring_zero(r));
    }
  }
}

TEST_CASE("text encodings round-trip for every kind") {
  Ring q = Ring::rationals();
  Ring z = Ring::integers();
  Ring m = Ring::modular(12);
  Ring c = Ring::complexes();
  Ring p = Ring::polynomials(Ring::rationals(), {"x", "y", "z"});
  std::mt19937_64 rng(7);
  for (const Ring& r : {q, z, m, c, p}) {
    CAPTURE(r.name());
    for (int t = 0; t < 40; ++t) {
      RingElem a = rand_elem(r, rng);
      CHECK(parse_elem(r, to_text(a)) == a);
    }
  }

  SUBCASE("specific forms") {
    CHECK(to_text(RingElem(q, mpq_class(-3, 4))) == "-3/4");
    CHECK(to_text(RingElem(q, mpq_class(5))) == "5");
    CHECK(to_text(from_int(z, -17)) == "-17");
    CHECK(to_text(RingElem(m, std::uint64_t(5))) == "5 mod 12");
    CHECK(parse_elem(m, "17") == RingElem(m, std::uint64_t(5)));
    CHECK(parse_elem(m, "-1") == RingElem(m, std::uint64_t(11)));
    CHECK(parse_elem(q, " 2 / 6 ") == RingElem(q, mpq_class(1, 3)));
    CHECK(parse_elem(c, "[1.5, -2]") == RingElem(c, std::complex<double>(1.5, -2.0)));
    CHECK(parse_elem(c, "3") == RingElem(c, std::complex<double>(3.0, 0.0)));
    CHECK(parse_elem(c, "2.5e-1") == RingElem(c, std::complex<double>(0.25, 0.0)));
  }

  SUBCASE("bad text raises ParseError") {
    CHECK_THROWS_AS(parse_elem(q, "1/0"), ParseError);
    CHECK_THROWS_AS(parse_elem(q, "x"), ParseError);
    CHECK_THROWS_AS(parse_elem(z, "3/4"), ParseError);
    CHECK_THROWS_AS(parse_elem(c, "[1,"), ParseError);
    CHECK_THROWS_AS(parse_elem(p, "w + 1"), ParseError);
  }
}

TEST_CASE("polynomial canonical text is graded then lexicographic") {
  Ring p = Ring::polynomials(Ring::rationals(), {"x", "y"});
  RingElem x = poly_var(p, 0), y = poly_var(p, 1);
  RingElem e = x * x + y * y * y - from_int(p, 2) * x * y + from_int(p, 5);
  // degree 3 first, then degree 2 terms with x-heavy monomials leading
  CHECK(to_text(e) == "y^3 + x^2 - 2*x*y + 5");
  CHECK(parse_elem(p, to_text(e)) == e);
  CHECK(to_text(ring_zero(p)) == "0");
  CHECK(to_text(-x) == "-x");
}

TEST_CASE("modular arithmetic with a composite modulus has zero divisors") {
  Ring m6 = Ring::modular(6);
  RingElem two(m6, std::uint64_t(2)), three(m6, std::uint64_t(3));
  CHECK(is_zero(two * three));
  CHECK(is_zero_or_zero_divisor(two));
  CHECK(is_zero_or_zero_divisor(three));
  CHECK_FALSE(is_zero_or_zero_divisor(RingElem(m6, std::uint64_t(5))));
  CHECK_FALSE(try_invert(two).has_value());
  CHECK_FALSE(try_invert(three).has_value());
  auto inv5 = try_invert(RingElem(m6, std::uint64_t(5)));
  REQUIRE(inv5.has_value());
  CHECK(*inv5 * RingElem(m6, std::uint64_t(5)) == ring_one(m6));

  Ring m7 = Ring::modular(7);
  for (std::uint64_t k = 1; k < 7; ++k) {
    auto inv = try_invert(RingElem(m7, k));
    REQUIRE(inv.has_value());
    CHECK(*inv * RingElem(m7, k) == ring_one(m7));
  }
}

TEST_CASE("invertibility in the other kinds") {
  Ring q = Ring::rationals();
  Ring z = Ring::integers();
  CHECK(try_invert(RingElem(q, mpq_class(-3, 7))).value() == RingElem(q, mpq_class(-7, 3)));
  CHECK_FALSE(try_invert(ring_zero(q)).has_value());
  CHECK(try_invert(from_int(z, -1)).value() == from_int(z, -1));
  CHECK_FALSE(try_invert(from_int(z, 2)).has_value());

  Ring p = Ring::polynomials(q, {"a"});
  CHECK(try_invert(from_int(p, 2)).value() == parse_elem(p, "1/2"));
  CHECK_FALSE(try_invert(poly_var(p, 0)).has_value());
}

TEST_CASE("int_scale matches repeated addition, int_divide inverts it on Q-algebras") {
  std::vector<Ring> rings = {Ring::rationals(), Ring::integers(), Ring::modular(6),
                             Ring::complexes(),
                             Ring::polynomials(Ring::modular(4), {"t"})};
  std::mt19937_64 rng(11);
  for (const Ring& r : rings) {
    CAPTURE(r.name());
    RingElem a = rand_elem(r, rng);
    RingElem acc = ring_zero(r);
    for (int n = 0; n <= 16; ++n) {
      CHECK(int_scale(long(n), a) == acc);
      CHECK(int_scale(long(-n), a) == -acc);
      acc = acc + a;
    }
  }
  Ring q = Ring::rationals();
  RingElem v(q, mpq_class(7, 3));
  CHECK(int_divide(int_scale(6L, v), 6L) == v);
  CHECK(int_divide(v, -2L) == RingElem(q, mpq_class(-7, 6)));
  CHECK_THROWS_AS(int_divide(from_int(Ring::integers(), 4), 2L), NotQAlgebraError);
  CHECK_THROWS_AS(int_divide(RingElem(Ring::modular(5), std::uint64_t(2)), 3L),
                  NotQAlgebraError);
}

TEST_CASE("mixed-ring arithmetic is rejected") {
  RingElem a = from_int(Ring::rationals(), 1);
  RingElem b = from_int(Ring::integers(), 1);
  CHECK_THROWS_AS(a + b, RingMismatchError);
  CHECK_THROWS_AS(a * b, RingMismatchError);
}

TEST_CASE("zero divisor detection in Z/4[t] needs the McCoy criterion") {
  // 2t + 2 is a zero divisor (annihilated by 2) though no single coefficient
  // content argument over a field would see it
  Ring p = Ring::polynomials(Ring::modular(4), {"t"});
  RingElem t = poly_var(p, 0);
  RingElem f = from_int(p, 2) * t + from_int(p, 2);
  CHECK(is_zero_or_zero_divisor(f));
  CHECK(is_zero(f * from_int(p, 2)));
  RingElem g = t + from_int(p, 1);
  CHECK_FALSE(is_zero_or_zero_divisor(g));
  RingElem h = from_int(p, 2) * t + from_int(p, 1);
  CHECK_FALSE(is_zero_or_zero_divisor(h));
}

TEST_CASE("moebius function values") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(3) == -1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK(mobius(210) == 1);
  // sum_{d | n} mu(d) = [n == 1]
  for (std::uint64_t n = 1; n <= 60; ++n) {
    int s = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) s += mobius(d);
    CHECK(s == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("ring descriptors compare structurally") {
  CHECK(Ring::rationals() == Ring::rationals());
  CHECK(Ring::modular(7) == Ring::modular(7));
  CHECK(Ring::modular(7) != Ring::modular(11));
  CHECK(Ring::polynomials(Ring::rationals(), {"x"}) ==
        Ring::polynomials(Ring::rationals(), {"x"}));
  CHECK(Ring::polynomials(Ring::rationals(), {"x"}) !=
        Ring::polynomials(Ring::rationals(), {"y"}));
  CHECK(Ring::rationals().is_q_algebra());
  CHECK(Ring::complexes().is_q_algebra());
  CHECK_FALSE(Ring::integers().is_q_algebra());
  CHECK_FALSE(Ring::modular(6).is_q_algebra());
  CHECK(Ring::polynomials(Ring::rationals(), {"x"}).is_q_algebra());
  CHECK_FALSE(Ring::polynomials(Ring::integers(), {"x"}).is_q_algebra());
  CHECK(Ring::modular(6).name() == "Z/6");
}

TEST_CASE("complex equality uses the ring tolerance") {
  Ring c = Ring::complexes(1e-9);
  RingElem a(c, std::complex<double>(1.0, 0.0));
  RingElem b(c, std::complex<double>(1.0 + 1e-12, 0.0));
  RingElem far(c, std::complex<double>(1.0 + 1e-6, 0.0));
  CHECK(a == b);
  CHECK(a != far);
  CHECK(complex_close({1.0, 2.0}, {1.0, 2.0}, 1e-9));
  CHECK_FALSE(complex_close({1.0, 2.0}, {1.1, 2.0}, 1e-9));
}
