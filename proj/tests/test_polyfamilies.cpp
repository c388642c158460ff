#include <doctest.h>

#include <cmath>
#include <numbers>

#include "derivpoly/combinat.hpp"
#include "derivpoly/errors.hpp"
#include "derivpoly/polyfamilies.hpp"
#include "oracles.hpp"

using namespace derivpoly;
using oracle::Complex;

namespace {

constexpr double kPi = std::numbers::pi;
const GaussRational I = GaussRational::i();

Poly P(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long x : coeffs) c.emplace_back(x);
  return Poly(c);
}

Poly fam(PolyFamily f, unsigned m) { return family_poly(f, m).poly; }

// p(-z)
Poly reflect(const Poly& p) { return compose_affine(p, -1, 0); }

double to_double(const GaussRational& z) {
  REQUIRE(z.is_real());
  return z.re().to_double();
}

double eval_d(const Poly& p, double z) {
  const auto c = p.real_coeffs();
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + it->to_double();
  return acc;
}

bool close_rel(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("family names") {
  for (PolyFamily f : kAllFamilies) CHECK(parse_family(family_name(f)) == f);
  CHECK(!parse_family("sin").has_value());
  CHECK(family_name(PolyFamily::Csch) == "csch");
}

TEST_CASE("geometric_poly examples") {
  CHECK(geometric_poly(0) == P({1}));
  CHECK(geometric_poly(1) == P({0, 1}));
  CHECK(geometric_poly(2) == P({0, 1, 2}));
  CHECK(geometric_poly(3) == P({0, 1, 6, 6}));
}

TEST_CASE("general_poly examples") {
  const GaussRational a(Rational(BigInt(2), BigInt(3))), b(-5);
  CHECK(general_poly(0, a, b) == P({1}));
  CHECK(general_poly(0, 0, 0) == P({1}));
  CHECK(general_poly(1, a, b) == Poly::affine(b, a));
  CHECK(general_poly(2, 0, 3) == GaussRational(9) * P({0, 1, 2}));
  for (unsigned m = 0; m <= 8; ++m) CHECK(general_poly(m, 0, 2) == GaussRational(pow(Rational(2), m)) * geometric_poly(m));
}

TEST_CASE("family_poly examples") {
  CHECK(fam(PolyFamily::Tanh, 1) == P({1, 0, -1}));
  CHECK(fam(PolyFamily::Tanh, 2) == P({0, -2, 0, 2}));
  CHECK(fam(PolyFamily::Sech, 1) == P({0, -1}));
  CHECK(fam(PolyFamily::Sech, 2) == P({-1, 0, 2}));
  CHECK(fam(PolyFamily::Tan, 1) == P({1, 0, 1}));
  CHECK(fam(PolyFamily::Sec, 2) == P({1, 0, 2}));
  CHECK(fam(PolyFamily::Cot, 1) == P({-1, 0, -1}));
  CHECK(fam(PolyFamily::Tan, 3) == P({2, 0, 8, 0, 6}));
  CHECK(fam(PolyFamily::Sec, 3) == P({0, 5, 0, 6}));
}

TEST_CASE("m = 0 follows the defining relations") {
  for (PolyFamily f : kAllFamilies) {
    const FamilyResult r = family_poly(f, 0);
    CHECK(r.family == f);
    CHECK(r.m == 0);
    CHECK(r.poly == (is_tangent_like(f) ? P({0, 1}) : P({1})));
  }
}

TEST_CASE("aliases share polynomials") {
  for (unsigned m = 0; m <= 15; ++m) {
    CHECK(fam(PolyFamily::Tanh, m) == fam(PolyFamily::Coth, m));
    CHECK(fam(PolyFamily::Sech, m) == fam(PolyFamily::Csch, m));
  }
}

TEST_CASE("family_next_oracle examples") {
  CHECK(family_next_oracle(PolyFamily::Tanh, P({1, 0, -1})) == P({0, -2, 0, 2}));
  CHECK(family_next_oracle(PolyFamily::Sech, P({1})) == P({0, -1}));
  CHECK(family_next_oracle(PolyFamily::Tan, P({0, 1})) == P({1, 0, 1}));
  CHECK(family_next_oracle(PolyFamily::Cot, P({0, 1})) == P({-1, 0, -1}));
  CHECK(family_next_oracle(PolyFamily::Sec, P({1})) == P({0, 1}));
}

TEST_CASE("explicit formulas agree with the chain-rule recurrence") {
  for (PolyFamily f : kAllFamilies) {
    Poly prev = fam(f, 0);
    for (unsigned m = 1; m <= 30; ++m) {
      const Poly cur = fam(f, m);
      CHECK_MESSAGE(cur == family_next_oracle(f, prev), family_name(f), " m=", m);
      prev = cur;
    }
  }
}

TEST_CASE("center_value examples") {
  CHECK(center_value(PolyFamily::Tanh, 2) == Rational(0));
  CHECK(center_value(PolyFamily::Sech, 4) == Rational(5));
  CHECK(center_value(PolyFamily::Tan, 3) == Rational(2));
  CHECK(center_value(PolyFamily::Sec, 4) == Rational(5));
  CHECK(center_value(PolyFamily::Cot, 1) == Rational(-1));
}

TEST_CASE("center_value agrees with evaluation at zero") {
  for (PolyFamily f : kAllFamilies) {
    for (unsigned m = 0; m <= 25; ++m) {
      CHECK_MESSAGE(GaussRational(center_value(f, m)) == evaluate(fam(f, m), 0), family_name(f), " m=", m);
    }
  }
}

TEST_CASE("parity") {
  for (unsigned m = 0; m <= 30; ++m) {
    const GaussRational tangent_sign = (m % 2 == 1) ? 1 : -1;  // (-1)^(m+1)
    const GaussRational secant_sign = (m % 2 == 0) ? 1 : -1;   // (-1)^m
    CHECK(reflect(fam(PolyFamily::Tan, m)) == tangent_sign * fam(PolyFamily::Tan, m));
    CHECK(reflect(fam(PolyFamily::Tanh, m)) == tangent_sign * fam(PolyFamily::Tanh, m));
    CHECK(reflect(fam(PolyFamily::Sech, m)) == secant_sign * fam(PolyFamily::Sech, m));
    CHECK(reflect(fam(PolyFamily::Sec, m)) == secant_sign * fam(PolyFamily::Sec, m));
    CHECK(fam(PolyFamily::Cot, m) == secant_sign * fam(PolyFamily::Tan, m));
  }
}

TEST_CASE("tanh polynomials vanish at +-1") {
  for (unsigned m = 1; m <= 30; ++m) {
    CHECK(evaluate(fam(PolyFamily::Tanh, m), 1).is_zero());
    CHECK(evaluate(fam(PolyFamily::Tanh, m), -1).is_zero());
  }
}

TEST_CASE("degrees") {
  for (PolyFamily f : kAllFamilies) {
    for (unsigned m = 0; m <= 30; ++m) {
      const auto d = fam(f, m).degree();
      REQUIRE(d.has_value());
      CHECK(*d == (is_tangent_like(f) ? m + 1 : m));
    }
  }
}

TEST_CASE("tan polynomials from tanh polynomials at iz") {
  for (unsigned m = 0; m <= 20; ++m) {
    const Poly rhs = -(pow(I, m + 1) * compose_affine(fam(PolyFamily::Tanh, m), I, 0));
    CHECK(fam(PolyFamily::Tan, m) == rhs);
  }
}

TEST_CASE("sec polynomials from sech polynomials at iz") {
  for (unsigned m = 0; m <= 20; ++m) {
    CHECK(fam(PolyFamily::Sec, m) == pow(I, m) * compose_affine(fam(PolyFamily::Sech, m), I, 0));
  }
}

TEST_CASE("tan polynomials from geometric polynomials") {
  // P_m(z) = -i^(m+1) (-2)^m (iz + 1) ω_m((iz - 1)/2)
  const GaussRational half(Rational(BigInt(1), BigInt(2)));
  for (unsigned m = 1; m <= 15; ++m) {
    const Poly w = compose_affine(geometric_poly(m), I * half, -half);
    const Poly rhs = -(pow(I, m + 1) * pow(GaussRational(-2), m)) * (Poly::affine(I, 1) * w);
    CHECK(fam(PolyFamily::Tan, m) == rhs);
  }
}

TEST_CASE("polynomials reproduce derivatives numerically") {
  for (unsigned m = 0; m <= 8; ++m) {
    for (double theta : {0.3, 0.7, 1.1}) {
      const double t = std::tanh(theta), tn = std::tan(theta);
      auto ev = [&](PolyFamily f, double z) { return eval_d(fam(f, m), z); };
      const double hyp = oracle::half_pole_distance(theta, 0.0, 1e300, 0.5 * kPi);
      const double circ = oracle::half_pole_distance(theta, 0.5 * kPi, kPi);
      const double ctanh = oracle::cauchy_derivative([](Complex w) { return std::tanh(w); }, theta, m, hyp);
      const double csech = oracle::cauchy_derivative([](Complex w) { return 1.0 / std::cosh(w); }, theta, m, hyp);
      const double ctan = oracle::cauchy_derivative([](Complex w) { return std::tan(w); }, theta, m, circ);
      const double csec = oracle::cauchy_derivative([](Complex w) { return 1.0 / std::cos(w); }, theta, m, circ);
      CHECK(close_rel(ev(PolyFamily::Tanh, t), ctanh, 1e-9));
      CHECK(close_rel(ev(PolyFamily::Sech, t) / std::cosh(theta), csech, 1e-9));
      CHECK(close_rel(ev(PolyFamily::Tan, tn), ctan, 1e-9));
      CHECK(close_rel(ev(PolyFamily::Sec, tn) / std::cos(theta), csec, 1e-9));
    }
  }
}

TEST_CASE("xD applied to x^a / (1 -+ x^b)") {
  // (xD)^m F(x) equals d^m/dθ^m F(e^θ); the θ-derivative comes from the Cauchy formula.
  struct Case {
    long a, b;
  };
  for (const Rational& x : {Rational(BigInt(1), BigInt(3)), Rational(BigInt(1), BigInt(2))}) {
    const double xd = x.to_double();
    const double theta = std::log(xd);
    for (const Case c : {Case{0, 1}, Case{1, 1}, Case{2, 1}, Case{1, 2}, Case{-1, 3}, Case{2, 3}}) {
      for (unsigned m = 0; m <= 6; ++m) {
        const Rational xb = pow(x, c.b);
        const double xa = std::pow(xd, c.a);

        const Rational minus_arg = xb / (Rational(1) - xb);
        const double minus_rhs =
            xa / (1.0 - xb.to_double()) * to_double(evaluate(general_poly(m, c.a, c.b), minus_arg));
        const double minus_lhs = oracle::cauchy_derivative(
            [&](Complex w) { return std::exp(double(c.a) * w) / (1.0 - std::exp(double(c.b) * w)); }, theta, m, 0.2);
        CHECK_MESSAGE(close_rel(minus_lhs, minus_rhs, 1e-6), "minus a=", c.a, " b=", c.b, " m=", m);

        const Rational plus_arg = -(xb / (Rational(1) + xb));
        const double plus_rhs = xa / (1.0 + xb.to_double()) * to_double(evaluate(general_poly(m, c.a, c.b), plus_arg));
        const double plus_lhs = oracle::cauchy_derivative(
            [&](Complex w) { return std::exp(double(c.a) * w) / (1.0 + std::exp(double(c.b) * w)); }, theta, m, 0.2);
        CHECK_MESSAGE(close_rel(plus_lhs, plus_rhs, 1e-6), "plus a=", c.a, " b=", c.b, " m=", m);
      }
    }
  }
}

TEST_CASE("csch derivatives: sech polynomials at coth vs the (-1, -2) general polynomial") {
  for (double theta : {0.5, 1.0, 2.0}) {
    const double csch = 1.0 / std::sinh(theta), coth = 1.0 / std::tanh(theta);
    const double e = std::exp(-2.0 * theta);
    for (unsigned m = 0; m <= 8; ++m) {
      const double via_sech_poly = csch * eval_d(fam(PolyFamily::Csch, m), coth);
      const double via_general = csch * eval_d(general_poly(m, -1, -2), e / (1.0 - e));
      const double via_contour =
          oracle::cauchy_derivative([](Complex w) { return 1.0 / std::sinh(w); }, theta, m, 0.5 * theta);
      CHECK_MESSAGE(close_rel(via_sech_poly, via_general, 1e-9), "theta=", theta, " m=", m);
      CHECK_MESSAGE(close_rel(via_sech_poly, via_contour, 1e-9), "theta=", theta, " m=", m);
    }
  }
}

TEST_CASE("constructed families are real up to m = 30") {
  for (PolyFamily f : kAllFamilies) {
    for (unsigned m = 0; m <= 30; ++m) {
      const FamilyResult r = family_poly(f, m);
      CHECK(r.poly.is_real());
      CHECK_NOTHROW((void)r.poly.real_coeffs());
    }
  }
}
