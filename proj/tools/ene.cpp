#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ene/analytic.hpp"
#include "ene/expr.hpp"
#include "ene/json_io.hpp"
#include "ene/product.hpp"
#include "ene/qpoly.hpp"
#include "ene/series.hpp"
#include "ene/verify.hpp"

namespace {

using nlohmann::ordered_json;

ene::Ring parse_ring_flag(const std::string& s) {
  if (s == "Q") return ene::Ring::rationals();
  if (s == "Z") return ene::Ring::integers();
  if (s.rfind("Zmod:", 0) == 0) {
    std::uint64_t m = 0;
    std::size_t used = 0;
    try {
      m = std::stoull(s.substr(5), &used);
    } catch (...) {
      throw ene::ParseError("bad modulus in ring flag '" + s + "'", 6);
    }
    if (used != s.size() - 5 || m < 2)
      throw ene::ParseError("bad modulus in ring flag '" + s + "'", 6);
    return ene::Ring::modular(m);
  }
  if (s == "C") return ene::Ring::complexes();
  if (s.rfind("C:", 0) == 0) {
    char* end = nullptr;
    double eps = std::strtod(s.c_str() + 2, &end);
    if (end != s.c_str() + s.size() || !(eps > 0.0))
      throw ene::ParseError("bad epsilon in ring flag '" + s + "'", 3);
    return ene::Ring::complexes(eps);
  }
  throw ene::ParseError("unknown ring '" + s + "' (use Q, Z, Zmod:m, C or C:eps)", 1);
}

// complex ring demanded by the numeric commands; the flag may tune epsilon
ene::Ring complex_ring_flag(const std::string& s, const char* cmd) {
  ene::Ring r = parse_ring_flag(s);
  if (r.kind() != ene::RingKind::ComplexFloat)
    throw ene::Error(std::string(cmd) + ": needs complex coefficients (--ring C or C:eps)");
  return r;
}

int parse_failure(const std::string& text, const ene::ParseError& e) {
  std::cerr << "error: " << e.what() << "\n";
  if (!text.empty() && e.column >= 1) {
    std::size_t col = std::min(e.column - 1, text.size());
    std::cerr << "  " << text << "\n  " << std::string(col, ' ') << "^\n";
  }
  return 2;
}

std::string fmt_real(double v) { return ordered_json(v).dump(); }

// deterministic display order: outward by modulus, ties broken by components
void sort_zeros(ene::ZeroSet& z) {
  std::vector<std::size_t> idx(z.zeros.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    auto za = z.zeros[a], zb = z.zeros[b];
    double ma = std::abs(za), mb = std::abs(zb);
    if (ma != mb) return ma > mb;
    if (za.real() != zb.real()) return za.real() > zb.real();
    return za.imag() > zb.imag();
  });
  ene::ZeroSet out;
  for (std::size_t i : idx) {
    out.zeros.push_back(z.zeros[i]);
    out.mults.push_back(z.mults[i]);
  }
  z = std::move(out);
}

std::string zero_text(std::complex<double> v) {
  return "[" + fmt_real(v.real()) + ", " + fmt_real(v.imag()) + "]";
}

ene::UnitSeries parse_poly_arg(const std::string& text, const ene::Ring& r, int order_flag) {
  int order = std::max(order_flag, ene::literal_order_bound(text));
  return ene::UnitSeries(ene::eval_expr(text, r, order));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for the second ring product on unit power series"};
  app.require_subcommand(1);
  app.footer(ene::kGrammarText);

  std::string ring_flag = "Q";
  std::string format = "pretty";
  std::string suite;
  std::string size = "small";
  std::string expr_text, poly_a, poly_b;
  int order = 16;
  int qp = 0;
  int qcap = 12;
  unsigned seed = 0;
  double tol = 1e-9;
  std::function<int()> action;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "pretty"}))
        ->capture_default_str();
  };
  auto add_ring_order = [&](CLI::App* c) {
    c->add_option("--ring", ring_flag, "coefficient ring: Q, Z, Zmod:m, C, C:eps")
        ->capture_default_str();
    c->add_option("--order", order, "truncation order")
        ->check(CLI::Range(0, 100000))
        ->capture_default_str();
  };
  auto add_numeric = [&](CLI::App* c) {
    c->add_option("--tol", tol, "numeric tolerance")->capture_default_str();
    c->add_option("--seed", seed, "random seed")->capture_default_str();
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate a series expression");
  eval->add_option("expr", expr_text, "expression (see the grammar below)")->required();
  add_ring_order(eval);
  add_format(eval);
  eval->callback([&] {
    action = [&]() -> int {
      ene::Ring r = parse_ring_flag(ring_flag);
      ene::Series v = ene::eval_expr(expr_text, r, order);
      if (format == "json")
        std::cout << ene::series_to_json(v).dump() << "\n";
      else
        std::cout << ene::pretty(v) << "\n";
      return 0;
    };
  });

  CLI::App* qpoly = app.add_subcommand("qpoly", "print a universal coefficient polynomial");
  qpoly->add_option("p", qp, "index of the polynomial")->required();
  qpoly->add_option("--qcap", qcap, "largest index served (generation cost grows fast)")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  add_format(qpoly);
  qpoly->callback([&] {
    action = [&]() -> int {
      if (qp < 1) {
        std::cerr << "error: qpoly index must be >= 1\n";
        return 2;
      }
      if (qp > qcap) {
        std::cerr << "error: qpoly index " << qp << " exceeds the cap " << qcap
                  << " (raise with --qcap)\n";
        return 4;
      }
      const ene::UnivPoly& q = ene::universal_poly(qp);
      if (format == "json") {
        ordered_json j;
        j["p"] = qp;
        j["terms"] = q.terms().size();
        j["text"] = q.canonical_text();
        std::cout << j.dump() << "\n";
      } else {
        std::cout << q.canonical_text() << "\n";
      }
      return 0;
    };
  });

  CLI::App* verify = app.add_subcommand("verify", "run an identity suite");
  verify->add_option("suite", suite, "ring-axioms, ene-axioms, main-formula, hadamard, "
                                     "operators, rational, analytic or all")
      ->required();
  verify->add_option("--seed", seed, "random seed")->capture_default_str();
  verify->add_option("--size", size, "instance counts: small or full")
      ->check(CLI::IsMember({"small", "full"}))
      ->capture_default_str();
  add_format(verify);
  verify->callback([&] {
    action = [&]() -> int {
      if (!ene::is_suite_name(suite)) {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        return 2;
      }
      ene::SuiteOptions opt;
      opt.seed = seed;
      opt.full = size == "full";
      ene::SuiteReport rep = ene::run_suite(suite, opt);
      ordered_json j = ene::report_to_json(rep);
      std::cout << (format == "json" ? j.dump() : j.dump(2)) << "\n";
      return rep.pass ? 0 : 1;
    };
  });

  CLI::App* roots = app.add_subcommand("roots", "zeros of a complex polynomial");
  roots->add_option("poly", poly_a, "polynomial with constant term 1")->required();
  add_ring_order(roots);
  add_numeric(roots);
  add_format(roots);
  roots->callback([&] {
    ring_flag = roots->count("--ring") ? ring_flag : "C";
    action = [&]() -> int {
      ene::Ring r = complex_ring_flag(ring_flag, "roots");
      ene::UnitSeries u = parse_poly_arg(poly_a, r, order);
      // the constant 1 has no zeros; report the empty set instead of
      // bouncing off the root finder's degree contract
      ene::ZeroSet z;
      if (ene::poly_degree(u) > 0) z = ene::poly_roots(u, tol, seed);
      sort_zeros(z);
      if (format == "json") {
        std::cout << ene::zeroset_to_json(z).dump() << "\n";
      } else {
        for (std::size_t i = 0; i < z.zeros.size(); ++i) {
          std::cout << zero_text(z.zeros[i]);
          if (z.mults[i] > 1) std::cout << " (x" << z.mults[i] << ")";
          std::cout << "\n";
        }
      }
      return 0;
    };
  });

  CLI::App* radius = app.add_subcommand("radius", "smallest zero modulus of a polynomial");
  radius->add_option("poly", poly_a, "polynomial with constant term 1")->required();
  add_ring_order(radius);
  add_numeric(radius);
  add_format(radius);
  radius->callback([&] {
    ring_flag = radius->count("--ring") ? ring_flag : "C";
    action = [&]() -> int {
      ene::Ring r = complex_ring_flag(ring_flag, "radius");
      ene::UnitSeries u = parse_poly_arg(poly_a, r, order);
      ene::ZeroSet z;
      if (ene::poly_degree(u) > 0) z = ene::poly_roots(u, tol, seed);
      sort_zeros(z);
      double rad = ene::ene_radius(z);
      bool fin = std::isfinite(rad);
      if (format == "json") {
        ordered_json j;
        if (fin)
          j["radius"] = rad;
        else
          j["radius"] = "infinity";
        j["zeros"] = ene::zeroset_to_json(z);
        std::cout << j.dump() << "\n";
      } else {
        std::cout << (fin ? fmt_real(rad) : std::string("infinity")) << "\n";
      }
      return 0;
    };
  });

  CLI::App* zp = app.add_subcommand("zero-products",
                                    "match the zeros of a product against pairwise products");
  zp->add_option("polyA", poly_a, "left polynomial")->required();
  zp->add_option("polyB", poly_b, "right polynomial")->required();
  add_ring_order(zp);
  add_numeric(zp);
  add_format(zp);
  zp->callback([&] {
    ring_flag = zp->count("--ring") ? ring_flag : "C";
    tol = zp->count("--tol") ? tol : 1e-6;
    action = [&]() -> int {
      ene::Ring r = complex_ring_flag(ring_flag, "zero-products");
      ene::UnitSeries a = parse_poly_arg(poly_a, r, order);
      ene::UnitSeries b = parse_poly_arg(poly_b, r, order);
      ene::ZeroProductReport rep = ene::verify_zero_products(a, b, tol, seed);
      if (format == "json") {
        std::cout << ene::report_to_json(rep).dump() << "\n";
      } else {
        std::cout << (rep.pass ? "pass" : "FAIL") << ": " << rep.pairs.size()
                  << " zero products matched, max mismatch " << fmt_real(rep.max_mismatch)
                  << "\n";
      }
      return rep.pass ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  // the ring flag is the one input every action parses before its own
  // arguments; validate it here so its errors point at the flag text
  try {
    parse_ring_flag(ring_flag);
  } catch (const ene::ParseError& e) {
    return parse_failure(ring_flag, e);
  }

  std::string source = expr_text.empty() ? (poly_a.empty() ? ring_flag : poly_a) : expr_text;
  try {
    return action();
  } catch (const ene::ParseError& e) {
    return parse_failure(source, e);
  } catch (const ene::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
