#include "ene/json_io.hpp"

namespace ene {

using nlohmann::ordered_json;

ordered_json ring_to_json(const Ring& r) {
  ordered_json j;
  switch (r.kind()) {
    case RingKind::BigRational:
      j["kind"] = "Q";
      break;
    case RingKind::BigInteger:
      j["kind"] = "Z";
      break;
    case RingKind::Modular:
      j["kind"] = "Zmod";
      j["modulus"] = r.modulus();
      break;
    case RingKind::ComplexFloat:
      j["kind"] = "C";
      j["epsilon"] = r.epsilon();
      break;
    case RingKind::Polynomial:
      j["kind"] = "poly";
      j["base"] = ring_to_json(r.base());
      j["vars"] = r.vars();
      break;
  }
  return j;
}

ordered_json series_to_json(const Series& s) {
  ordered_json j;
  j["ring"] = ring_to_json(s.ring());
  j["order"] = s.order();
  ordered_json coeffs = ordered_json::array();
  for (int k = 0; k <= s.order(); ++k) coeffs.push_back(to_text(s.coeff(k)));
  j["coeffs"] = std::move(coeffs);
  return j;
}

ordered_json series_to_json(const UnitSeries& s) { return series_to_json(s.series()); }

namespace {
ordered_json cplx_to_json(std::complex<double> z) { return ordered_json::array({z.real(), z.imag()}); }
}  // namespace

ordered_json zeroset_to_json(const ZeroSet& z) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < z.zeros.size(); ++i) {
    ordered_json item;
    item["zero"] = cplx_to_json(z.zeros[i]);
    item["multiplicity"] = z.mults[i];
    arr.push_back(std::move(item));
  }
  return arr;
}

ordered_json report_to_json(const ZeroProductReport& r) {
  ordered_json j;
  j["pass"] = r.pass;
  j["max_mismatch"] = r.max_mismatch;
  ordered_json pairs = ordered_json::array();
  for (const auto& [expected, found] : r.pairs)
    pairs.push_back(ordered_json::array({cplx_to_json(expected), cplx_to_json(found)}));
  j["pairs"] = std::move(pairs);
  return j;
}

ordered_json report_to_json(const RadiusReport& r) {
  ordered_json j;
  j["pass"] = r.pass;
  j["product_side"] = r.product_side;
  j["factor_side"] = r.factor_side;
  return j;
}

ordered_json report_to_json(const SuiteReport& r) {
  ordered_json j;
  j["suite"] = r.suite;
  j["pass"] = r.pass;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json item;
    item["name"] = c.name;
    item["pass"] = c.pass;
    if (!c.note.empty()) item["note"] = c.note;
    checks.push_back(std::move(item));
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace ene
