#include <doctest.h>

#include <cmath>
#include <numbers>

#include "derivpoly/errors.hpp"
#include "derivpoly/quadcheck.hpp"
#include "oracles.hpp"

using namespace derivpoly;
using oracle::Complex;

namespace {

constexpr double kPi = std::numbers::pi;
const QuadConfig kCfg;

Complex i_pow(unsigned n) {
  static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[n % 4];
}

}  // namespace

TEST_CASE("integrate_halfline examples") {
  const auto sech = integrate_halfline([](double x) { return Complex(1.0 / std::cosh(x)); }, kCfg);
  CHECK(std::abs(sech.value - kPi / 2) < 1e-12);
  const auto expo = integrate_halfline([](double x) { return Complex(std::exp(-x)); }, kCfg);
  CHECK(std::abs(expo.value - 1.0) < 1e-12);
  const double catalan = oracle::catalan();
  CHECK(std::abs(catalan - 0.915965594177219015) < 1e-15);
  const auto xsech = integrate_halfline([](double x) { return Complex(x / std::cosh(x)); }, kCfg, 1);
  CHECK(std::abs(xsech.value - 2 * catalan) < 1e-12);
  CHECK(xsech.error_estimate >= 0.0);
}

TEST_CASE("QuadConfig validation") {
  QuadConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.abs_tol = 1e-14;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = QuadConfig{};
  cfg.max_depth = 61;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.max_depth = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = QuadConfig{};
  cfg.truncation_margin = -1;
  CHECK_THROWS_AS(integrate_halfline([](double) { return Complex(0.0); }, cfg), std::invalid_argument);
}

TEST_CASE("integrate_halfline gives up at max depth") {
  QuadConfig cfg;
  cfg.max_depth = 1;
  auto step = [](double x) { return Complex(x < 1.2345 ? 1.0 : 0.0); };
  CHECK_THROWS_AS(integrate_halfline(step, cfg), ConvergenceError);
}

TEST_CASE("make_report") {
  const CheckReport r = make_report("x", {{"n", 1}}, Complex(2.0), Complex(4.0), 0.6);
  CHECK(r.residual == doctest::Approx(0.5));
  CHECK(r.pass);
  const CheckReport small = make_report("x", {}, Complex(1e-3), Complex(0.0), 1e-4);
  CHECK(small.residual == doctest::Approx(1e-3));
  CHECK(!small.pass);
}

TEST_CASE("check_cos_identity examples") {
  const auto r0 = check_cos_identity(0, 0.0, kCfg);
  CHECK(std::abs(r0.rhs - kPi / 2) < 1e-14);
  CHECK(r0.residual < 1e-10);
  const auto r1 = check_cos_identity(1, 0.0, kCfg);
  CHECK(std::abs(r1.rhs) == 0.0);
  CHECK(std::abs(r1.lhs) < 1e-12);
  CHECK(r1.pass);
  const auto r2 = check_cos_identity(2, 0.5, kCfg);
  CHECK(r2.residual < 1e-8);
  CHECK(r2.identity_id == "integral.cos");
  CHECK(r2.params.at("n") == 2);
  CHECK(r2.params.at("a") == 0.5);
  // ∫ x^2 cos(ax + π) / cosh x dx is the second a-derivative of (π/2) sech(πa/2)
  const double d2 = oracle::cauchy_derivative([](Complex a) { return 0.5 * kPi / std::cosh(0.5 * kPi * a); }, 0.5, 2, 0.3);
  CHECK(std::abs(r2.rhs.real() - d2) < 1e-11);
}

TEST_CASE("check_sin_identity examples") {
  const auto r0 = check_sin_identity(0, 0.0, kCfg);
  CHECK(std::abs(r0.lhs) < 1e-12);
  CHECK(std::abs(r0.rhs) < 1e-12);
  const auto r1 = check_sin_identity(0, 1.0, kCfg);
  CHECK(r1.residual < 1e-8);
  CHECK(std::abs(r1.lhs.real() - oracle::sech_exp_integral_series(0, 1.0).imag()) < 1e-11);
  CHECK(check_sin_identity(1, 0.5, kCfg).residual < 1e-7);
}

TEST_CASE("check_exp_identity examples") {
  const auto r0 = check_exp_identity(0, 0.0, kCfg);
  CHECK(std::abs(r0.rhs - kPi / 2) < 1e-12);
  CHECK(r0.pass);
  CHECK(check_exp_identity(0, 0.5, kCfg).residual < 1e-8);
  CHECK(check_exp_identity(2, 1.0, kCfg).residual < 1e-7);
}

TEST_CASE("order caps and domains") {
  CHECK_THROWS_AS(check_cos_identity(9, 0.0, kCfg), DomainError);
  CHECK_THROWS_AS(check_sin_identity(7, 0.0, kCfg), DomainError);
  CHECK_THROWS_AS(check_exp_identity(7, 0.0, kCfg), DomainError);
  CHECK_THROWS_AS(check_hoffman_integral(1, 1.0, HoffmanKernel::Plus, kCfg), DomainError);
  CHECK_THROWS_AS(check_hoffman_integral(0, 0.5, HoffmanKernel::Minus, kCfg), DomainError);
  CHECK(check_hoffman_integrals(0, 0.5, kCfg).size() == 1);
  CHECK(check_hoffman_integrals(2, 0.5, kCfg).size() == 2);
}

TEST_CASE("identities across orders and frequencies") {
  for (unsigned n = 0; n <= 6; ++n) {
    for (double a : {0.0, 0.5, 1.0, 2.0, -0.75}) {
      CHECK_MESSAGE(check_cos_identity(n, a, kCfg).pass, "cos n=", n, " a=", a);
      CHECK_MESSAGE(check_sin_identity(n, a, kCfg).pass, "sin n=", n, " a=", a);
      CHECK_MESSAGE(check_exp_identity(n, a, kCfg).pass, "exp n=", n, " a=", a);
    }
  }
  for (unsigned n = 7; n <= 8; ++n) CHECK(check_cos_identity(n, 0.5, kCfg).pass);
}

TEST_CASE("quadrature agrees with the termwise sech series") {
  for (unsigned n = 0; n <= 6; ++n) {
    for (double a : {0.0, 0.5, 1.0}) {
      const Complex series = oracle::sech_exp_integral_series(n, a);
      const Complex phased = i_pow(n) * series;
      const double scale = std::max(1.0, std::abs(series));
      CHECK_MESSAGE(std::abs(exp_integral(n, a, kCfg) - series) < 1e-11 * scale, "n=", n, " a=", a);
      CHECK(std::abs(cos_integral(n, a, kCfg).real() - phased.real()) < 1e-11 * scale);
      CHECK(std::abs(sin_integral(n, a, kCfg).real() - phased.imag()) < 1e-11 * scale);
    }
  }
}

TEST_CASE("cos, sin and exp integrals are consistent") {
  // cos(ax + nπ/2) + i sin(ax + nπ/2) = i^n e^{iax}
  for (unsigned n = 0; n <= 6; ++n) {
    for (double a : {0.0, 0.5, 1.0, 1.5}) {
      const Complex combined = check_cos_identity(n, a, kCfg).lhs + Complex(0, 1) * check_sin_identity(n, a, kCfg).lhs;
      CHECK(std::abs(i_pow(n) * check_exp_identity(n, a, kCfg).lhs - combined) < 1e-10);
    }
  }
}

TEST_CASE("halving abs_tol moves the result by less than the error estimate") {
  QuadConfig coarse;
  coarse.abs_tol = 1e-10;
  QuadConfig fine = coarse;
  fine.abs_tol = coarse.abs_tol / 2;
  for (unsigned n = 0; n <= 6; ++n) {
    for (double a : {0.0, 0.5, 1.0}) {
      auto f = [n, a](double x) { return std::pow(x, n) * std::polar(1.0, a * x) / std::cosh(x); };
      const QuadResult c = integrate_halfline(f, coarse, n);
      const QuadResult h = integrate_halfline(f, fine, n);
      CHECK_MESSAGE(std::abs(c.value - h.value) <= c.error_estimate, "n=", n, " a=", a);
    }
  }
}

TEST_CASE("cos identity is even in a for even n") {
  for (unsigned n : {0u, 2u, 4u, 6u}) {
    for (double a : {0.5, 1.0, 2.5}) {
      const auto plus = check_cos_identity(n, a, kCfg), minus = check_cos_identity(n, -a, kCfg);
      CHECK(std::abs(plus.lhs - minus.lhs) < 1e-10);
      CHECK(std::abs(plus.rhs - minus.rhs) < 1e-10);
    }
  }
}

TEST_CASE("Hoffman integral examples") {
  const auto plus0 = check_hoffman_integral(0, 0.5, HoffmanKernel::Plus, kCfg);
  CHECK(std::abs(plus0.rhs - kPi) < 1e-14);
  CHECK(plus0.residual < 1e-9);
  CHECK(plus0.identity_id == "integral.hoffman_plus");
  const auto minus1 = check_hoffman_integral(1, 0.5, HoffmanKernel::Minus, kCfg);
  CHECK(std::abs(minus1.rhs - kPi * kPi) < 1e-13);
  CHECK(minus1.residual < 1e-8);
  CHECK(minus1.identity_id == "integral.hoffman_minus");
  CHECK(check_hoffman_integral(2, 1.0 / 3, HoffmanKernel::Plus, kCfg).residual < 1e-7);
}

TEST_CASE("Hoffman integrals against series oracles") {
  for (unsigned n = 0; n <= 5; ++n) {
    for (double a : {0.2, 1.0 / 3, 0.5, 0.8}) {
      const auto plus = check_hoffman_integral(n, a, HoffmanKernel::Plus, kCfg);
      CHECK(plus.pass);
      const double series = oracle::fermi_integral_series(n, a);
      CHECK_MESSAGE(std::abs(plus.lhs.real() - series) < 1e-9 * std::max(1.0, std::abs(series)), "n=", n, " a=", a);
      if (n == 0) continue;
      const auto minus = check_hoffman_integral(n, a, HoffmanKernel::Minus, kCfg);
      CHECK(minus.pass);
      // n! [ζ(n+1, 1-a) - (-1)^n ζ(n+1, a)] from the geometric expansion of 1/(e^x - 1) on each half-line
      double fact = 1.0;
      for (unsigned i = 2; i <= n; ++i) fact *= i;
      double zeta_pos = 0.0, zeta_neg = 0.0;
      for (int k = 2000000; k >= 0; --k) {
        zeta_pos += std::pow(k + 1.0 - a, -(n + 1.0));
        zeta_neg += std::pow(k + a, -(n + 1.0));
      }
      const double tail = 1.0 / (n * std::pow(2000000.5, n));
      const double expected = fact * ((zeta_pos + tail) - (n % 2 == 0 ? 1.0 : -1.0) * (zeta_neg + tail));
      CHECK_MESSAGE(std::abs(minus.lhs.real() - expected) < 1e-9 * std::max(1.0, std::abs(expected)), "n=", n, " a=", a);
    }
  }
}
