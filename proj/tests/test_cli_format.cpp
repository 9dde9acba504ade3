#include "doctest.h"

#include <complex>
#include <string>

#include "ene/json_io.hpp"

using namespace ene;
using nlohmann::ordered_json;

namespace {

const Ring Q = Ring::rationals();

}  // namespace

TEST_CASE("pretty text across coefficient kinds") {
  CHECK(pretty(unit_from(Q, 4, {"-6"})) == "1 - 6*X + O(X^5)");

  Ring m12 = Ring::modular(12);
  UnitSeries m = UnitSeries::one(m12, 1);
  m.set_coeff(1, RingElem(m12, std::uint64_t(5)));
  CHECK(pretty(m) == "(1 mod 12) + (5 mod 12)*X + O(X^2)");

  Ring c = Ring::complexes();
  UnitSeries z = UnitSeries::one(c, 1);
  z.set_coeff(1, RingElem(c, std::complex<double>(1.5, -2.0)));
  CHECK(pretty(z) == "[1, 0] + [1.5, -2]*X + O(X^2)");

  Ring pr = Ring::polynomials(Q, {"a", "b"});
  UnitSeries p = UnitSeries::one(pr, 2);
  p.set_coeff(1, poly_var(pr, 0) + poly_var(pr, 1));
  p.set_coeff(2, -poly_var(pr, 0));
  CHECK(pretty(p) == "1 + (a + b)*X - a*X^2 + O(X^3)");
}

TEST_CASE("ring descriptors in json") {
  CHECK(ring_to_json(Q).dump() == R"({"kind":"Q"})");
  CHECK(ring_to_json(Ring::integers()).dump() == R"({"kind":"Z"})");
  CHECK(ring_to_json(Ring::modular(12)).dump() == R"({"kind":"Zmod","modulus":12})");
  CHECK(ring_to_json(Ring::complexes()).dump() == R"({"kind":"C","epsilon":1e-09})");
  CHECK(ring_to_json(Ring::polynomials(Q, {"a", "b"})).dump() ==
        R"({"kind":"poly","base":{"kind":"Q"},"vars":["a","b"]})");
}

TEST_CASE("series serialization keeps exact coefficient text") {
  UnitSeries f = unit_from(Q, 2, {"-6"});
  CHECK(series_to_json(f).dump() ==
        R"({"ring":{"kind":"Q"},"order":2,"coeffs":["1","-6","0"]})");

  UnitSeries g = unit_from(Q, 1, {"-1/3"});
  ordered_json j = series_to_json(g);
  CHECK(j["coeffs"][1] == "-1/3");

  Ring m7 = Ring::modular(7);
  UnitSeries h = unit_from(m7, 1, {"9"});
  CHECK(series_to_json(h)["coeffs"][1] == "2 mod 7");

  // serialization is deterministic
  CHECK(series_to_json(f).dump() == series_to_json(f).dump());
}

TEST_CASE("zero sets in json") {
  ZeroSet z;
  z.zeros = {std::complex<double>(1.0, 0.0), std::complex<double>(0.0, -0.5)};
  z.mults = {2, 1};
  CHECK(zeroset_to_json(z).dump() ==
        R"([{"zero":[1.0,0.0],"multiplicity":2},{"zero":[0.0,-0.5],"multiplicity":1}])");
  CHECK(zeroset_to_json(ZeroSet{}).dump() == "[]");
}

TEST_CASE("report serialization") {
  RadiusReport rr{true, 0.5, 0.25};
  CHECK(report_to_json(rr).dump() ==
        R"({"pass":true,"product_side":0.5,"factor_side":0.25})");

  ZeroProductReport zp;
  zp.pass = false;
  zp.max_mismatch = 0.125;
  zp.pairs.emplace_back(std::complex<double>(1.0, 0.0), std::complex<double>(1.125, 0.0));
  CHECK(report_to_json(zp).dump() ==
        R"({"pass":false,"max_mismatch":0.125,"pairs":[[[1.0,0.0],[1.125,0.0]]]})");

  SuiteReport sr;
  sr.suite = "ring-axioms";
  sr.pass = true;
  sr.checks.push_back({"base ring laws", true, ""});
  sr.checks.push_back({"series group laws", true, "200 instances"});
  CHECK(report_to_json(sr).dump() ==
        R"({"suite":"ring-axioms","pass":true,"checks":[)"
        R"({"name":"base ring laws","pass":true},)"
        R"({"name":"series group laws","pass":true,"note":"200 instances"}]})");
}
