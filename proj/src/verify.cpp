#include "derivpoly/verify.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "derivpoly/analytic.hpp"
#include "derivpoly/combinat.hpp"
#include "derivpoly/polyfamilies.hpp"

namespace derivpoly {

namespace {

const GaussRational kHalf = Rational(BigInt(1), BigInt(2));

double display_value(const Poly& p) { return evaluate(p, kHalf).re().to_double(); }

CheckReport exact_report(std::string id, std::map<std::string, double> params, bool equal, double lhs, double rhs) {
  CheckReport r = make_report(std::move(id), std::move(params), lhs, rhs, 0.0);
  r.residual = equal ? 0.0 : 1.0;
  r.pass = equal;
  return r;
}

CheckReport poly_report(std::string id, std::map<std::string, double> params, const Poly& lhs, const Poly& rhs) {
  return exact_report(std::move(id), std::move(params), lhs == rhs, display_value(lhs), display_value(rhs));
}

CheckReport number_report(std::string id, std::map<std::string, double> params, const Rational& lhs, const Rational& rhs) {
  return exact_report(std::move(id), std::move(params), lhs == rhs, lhs.to_double(), rhs.to_double());
}

std::string fam(std::string_view prefix, PolyFamily f) { return std::string(prefix) + "." + std::string(family_name(f)); }

template <typename T>
std::vector<T> pick(const std::optional<T>& chosen, std::vector<T> defaults) {
  if (chosen) return {*chosen};
  return defaults;
}

std::vector<unsigned> range(unsigned lo, unsigned hi) {
  std::vector<unsigned> out;
  for (unsigned i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

}  // namespace

std::vector<CheckReport> verify_polys(const VerifyOptions& opts) {
  const unsigned max_m = opts.max_m;
  std::vector<CheckReport> out;

  for (PolyFamily f : kAllFamilies) {
    std::vector<Poly> table;
    for (unsigned m = 0; m <= max_m; ++m) table.push_back(family_poly(f, m).poly);

    for (unsigned m = 1; m <= max_m; ++m) {
      out.push_back(poly_report(fam("polys.oracle", f), {{"m", m}}, table[m], family_next_oracle(f, table[m - 1])));
    }
    for (unsigned m = 0; m <= max_m; ++m) {
      const Poly& p = table[m];
      const std::size_t expected_degree = is_tangent_like(f) ? m + 1 : m;
      const bool degree_ok = p.degree() == expected_degree;
      out.push_back(exact_report(fam("polys.degree", f), {{"m", m}}, degree_ok,
                                 p.degree() ? static_cast<double>(*p.degree()) : -1.0, static_cast<double>(expected_degree)));

      // F(-z) = (-1)^(m+1) F(z) for the tangent-like families, (-1)^m F(z) otherwise.
      const bool odd = (is_tangent_like(f) ? m + 1 : m) % 2 == 1;
      const Poly reflected = compose_affine(p, -1, 0);
      out.push_back(poly_report(fam("polys.parity", f), {{"m", m}}, reflected, odd ? -p : p));

      out.push_back(number_report(fam("polys.center", f), {{"m", m}}, center_value(f, m),
                                  evaluate(p, GaussRational(0)).re()));
    }
  }

  for (unsigned m = 1; m <= max_m; ++m) {
    const Poly c = family_poly(PolyFamily::Tanh, m).poly;
    const bool roots = evaluate(c, 1).is_zero() && evaluate(c, -1).is_zero();
    out.push_back(exact_report("polys.roots.tanh", {{"m", m}}, roots, evaluate(c, 1).re().to_double(),
                               evaluate(c, -1).re().to_double()));
    // P_m(z) = -i^(m+1) C_m(iz)
    const GaussRational i = GaussRational::i();
    out.push_back(poly_report("polys.tan_from_tanh", {{"m", m}}, family_poly(PolyFamily::Tan, m).poly,
                              compose_affine(c, i, 0) * -pow(i, m + 1)));
  }

  for (unsigned k = 1; 2 * k - 1 <= max_m; ++k) {
    out.push_back(number_report("numbers.tangent", {{"k", k}}, tangent_number(k),
                                evaluate(family_poly(PolyFamily::Tan, 2 * k - 1).poly, 0).re()));
    Rational signed_c = tanh_center_value(2 * k - 1);
    if (k % 2 == 0) signed_c = -signed_c;
    out.push_back(number_report("numbers.tangent_from_tanh", {{"k", k}}, tangent_number(k), signed_c));
  }
  for (unsigned m = 0; m <= max_m; ++m) {
    out.push_back(number_report("numbers.euler", {{"m", m}}, euler_number(m),
                                evaluate(family_poly(PolyFamily::Sech, m).poly, 0).re()));
    // sum_k (-1)^k {m k} k!/2^k = 2/(m+1) (1 - 2^(m+1)) B_{m+1}
    Rational lhs;
    for (unsigned k = 0; k <= m; ++k) {
      Rational term = Rational(stirling2(m, k) * factorial(k)) / Rational(BigInt(1) << k);
      lhs += k % 2 == 0 ? term : -term;
    }
    const Rational rhs = Rational(BigInt(2) * (1 - (BigInt(1) << (m + 1)))) / Rational(static_cast<long>(m + 1)) *
                         bernoulli(m + 1);
    out.push_back(number_report("numbers.stirling_bernoulli", {{"m", m}}, lhs, rhs));
  }
  return out;
}

std::vector<CheckReport> verify_reflection(const VerifyOptions& opts) {
  const double tol = opts.tol.value_or(1e-9);
  std::vector<CheckReport> out;
  for (unsigned n : pick(opts.n, range(0, 6))) {
    for (double zv : pick(opts.z, std::vector<double>{0.1, 0.3, 0.7, 0.9})) {
      out.push_back(make_report("reflection", {{"n", n}, {"z", zv}}, reflection_lhs(n, zv), reflection_rhs(n, zv), tol));
      if (n >= 1) {
        out.push_back(make_report("reflection.csc_form", {{"n", n}, {"z", zv}}, reflection_rhs_csc_form(n, zv),
                                  reflection_rhs(n, zv), tol));
      }
    }
  }
  return out;
}

std::vector<CheckReport> verify_eisenstein(const VerifyOptions& opts) {
  std::vector<CheckReport> out;
  for (unsigned r : pick(opts.r, opts.n ? std::vector<unsigned>{*opts.n} : range(1, 6))) {
    const EisensteinExpansion expansion = eisenstein_expansion(r);
    for (double zv : pick(opts.z, std::vector<double>{0.2, 0.3, 0.45})) {
      const ComplexF e1 = std::numbers::pi / std::tan(std::numbers::pi * zv);
      const ComplexF rhs = expansion.evaluate(e1);
      const ComplexF lhs = eisenstein_direct(r, zv, opts.terms);
      // Absolute tail bound plus a rounding allowance, expressed in the report's relative scale.
      const double scale = std::max(1.0, std::abs(rhs));
      const double tol = opts.tol.value_or((eisenstein_tail_bound(r, zv, opts.terms) + 1e-10 * scale) / scale);
      out.push_back(make_report("eisenstein", {{"r", r}, {"z", zv}, {"terms", static_cast<double>(opts.terms)}}, lhs,
                                rhs, tol));
      if (r >= 2) {
        out.push_back(make_report("eisenstein.csc_form", {{"r", r}, {"z", zv}}, eisenstein_csc_form(r, zv), rhs,
                                  opts.tol.value_or(1e-10)));
      }
    }
  }
  return out;
}

std::vector<CheckReport> verify_integrals(const VerifyOptions& opts) {
  std::vector<CheckReport> out;
  const auto orders = pick(opts.n, range(0, 4));
  const auto params = pick(opts.a, std::vector<double>{0.0, 0.5, 1.0});
  for (unsigned n : orders) {
    for (double a : params) {
      out.push_back(check_cos_identity(n, a, opts.quad, opts.tol.value_or(kCosTol)));
      out.push_back(check_sin_identity(n, a, opts.quad, opts.tol.value_or(kSinTol)));
      out.push_back(check_exp_identity(n, a, opts.quad, opts.tol.value_or(kExpTol)));
      // i^n ∫ x^n e^{iax}/cosh x = ∫ x^n cos(ax + nπ/2)/cosh x + i ∫ x^n sin(ax + nπ/2)/cosh x
      const ComplexF phased = std::pow(ComplexF(0.0, 1.0), static_cast<int>(n)) * exp_integral(n, a, opts.quad);
      const ComplexF split = cos_integral(n, a, opts.quad) + ComplexF(0.0, 1.0) * sin_integral(n, a, opts.quad);
      out.push_back(make_report("integral.phase", {{"n", n}, {"a", a}}, phased, split, opts.tol.value_or(1e-10)));
    }
  }
  std::vector<std::pair<unsigned, double>> hoffman = {{0, 0.5}, {1, 0.5}, {2, 1.0 / 3.0}};
  if (opts.n || opts.a) {
    hoffman.clear();
    const double a = opts.a.value_or(0.5);
    if (a > 0.0 && a < 1.0) {
      for (unsigned n : orders) hoffman.emplace_back(n, a);
    }
  }
  for (const auto& [n, a] : hoffman) {
    for (auto& report : check_hoffman_integrals(n, a, opts.quad, opts.tol.value_or(kHoffmanTol))) {
      out.push_back(std::move(report));
    }
  }
  return out;
}

std::optional<std::vector<CheckReport>> run_suite(std::string_view suite, const VerifyOptions& opts) {
  if (suite == "polys") return verify_polys(opts);
  if (suite == "reflection") return verify_reflection(opts);
  if (suite == "eisenstein") return verify_eisenstein(opts);
  if (suite == "integrals") return verify_integrals(opts);
  if (suite == "all") {
    std::vector<CheckReport> out;
    for (auto part : {verify_polys(opts), verify_reflection(opts), verify_eisenstein(opts), verify_integrals(opts)}) {
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  return std::nullopt;
}

}  // namespace derivpoly
