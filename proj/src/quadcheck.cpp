#include "derivpoly/quadcheck.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "derivpoly/errors.hpp"
#include "derivpoly/polyfamilies.hpp"

namespace derivpoly {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss-Kronrod 7/15 on [-1, 1]: Kronrod abscissae (positive half, descending)
// and weights; every odd-indexed node is also a Gauss node.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo;
  double hi;
  unsigned depth;
};

struct PanelEstimate {
  ComplexF kronrod;
  double error;
  double abs_integral;
};

PanelEstimate gauss_kronrod(const Integrand& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const ComplexF fc = f(center);
  ComplexF kronrod = fc * kWgk[7];
  ComplexF gauss = fc * kWg[3];
  double abs_sum = std::abs(fc) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const ComplexF f1 = f(center - dx);
    const ComplexF f2 = f(center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half), abs_sum * std::abs(half)};
}

double truncation_point(unsigned n, const QuadConfig& cfg) {
  const double nd = n;
  double x = std::max(40.0, n > 1 ? nd * std::log(nd) + 40.0 : 40.0);
  const double log_target = std::log(cfg.abs_tol / 10.0);
  while (nd * std::log(x) - x + cfg.truncation_margin >= log_target) x += 5.0;
  return x;
}

void require_order(unsigned n, unsigned max_n, const char* what) {
  if (n > max_n) throw DomainError(std::string(what) + ": n must be <= " + std::to_string(max_n));
}

// i^n * z with exact quarter turns.
ComplexF rotate_quarter(unsigned n, ComplexF z) {
  switch (n % 4) {
    case 0: return z;
    case 1: return {-z.imag(), z.real()};
    case 2: return -z;
    default: return {z.imag(), -z.real()};
  }
}

// x^n / cosh x without overflow.
double power_sech(unsigned n, double x) {
  const double e = std::exp(-x);
  return 2.0 * std::pow(x, static_cast<int>(n)) * e / (1.0 + e * e);
}

// ∫_0^∞ x^n e^{i(ax + nπ/2)} / cosh x dx; the real part is the cos integral, the imaginary part the sin integral.
ComplexF phased_integral(unsigned n, double a, const QuadConfig& cfg) {
  auto f = [n, a](double x) { return rotate_quarter(n, std::polar(power_sech(n, x), a * x)); };
  return integrate_halfline(f, cfg, n).value;
}

double eval_family(PolyFamily family, unsigned m, double z) {
  const auto coeffs = to_doubles(family_poly(family, m).poly);
  return horner<double>(coeffs, z);
}

// [ψ_n((1+ia)/4) - (-1)^n ψ_n((1-ia)/4)] / 2^(2n+1)
ComplexF polygamma_pair(unsigned n, double a) {
  const ComplexF plus = polygamma(n, ComplexF(0.25, 0.25 * a));
  const ComplexF minus = polygamma(n, ComplexF(0.25, -0.25 * a));
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return std::ldexp(1.0, -static_cast<int>(2 * n + 1)) * (plus - sign * minus);
}

}  // namespace

void QuadConfig::validate() const {
  if (!(abs_tol >= 1e-13)) throw std::invalid_argument("QuadConfig: abs_tol must be >= 1e-13");
  if (max_depth == 0 || max_depth > 60) throw std::invalid_argument("QuadConfig: max_depth must be in [1, 60]");
  if (!(truncation_margin >= 0.0)) throw std::invalid_argument("QuadConfig: truncation_margin must be >= 0");
}

CheckReport make_report(std::string id, std::map<std::string, double> params, ComplexF lhs, ComplexF rhs, double tol) {
  CheckReport r;
  r.identity_id = std::move(id);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.residual = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
  r.tol = tol;
  r.pass = r.residual <= tol;
  return r;
}

QuadResult integrate_halfline(const Integrand& f, const QuadConfig& cfg, unsigned growth_power) {
  cfg.validate();
  const double x_max = truncation_point(growth_power, cfg);
  constexpr int kInitialPanels = 16;
  constexpr double kRoundoff = 50.0 * std::numeric_limits<double>::epsilon();

  std::vector<Panel> stack;
  for (int i = kInitialPanels - 1; i >= 0; --i) {
    stack.push_back({x_max * i / kInitialPanels, x_max * (i + 1) / kInitialPanels, 0});
  }
  QuadResult result{0.0, 0.0};
  while (!stack.empty()) {
    const Panel panel = stack.back();
    stack.pop_back();
    const PanelEstimate est = gauss_kronrod(f, panel.lo, panel.hi);
    const double budget = std::max(cfg.abs_tol * (panel.hi - panel.lo) / x_max, kRoundoff * est.abs_integral);
    if (est.error <= budget) {
      result.value += est.kronrod;
      result.error_estimate += est.error;
      continue;
    }
    if (panel.depth >= cfg.max_depth) {
      throw ConvergenceError("integrate_halfline: error " + std::to_string(est.error) + " on [" +
                             std::to_string(panel.lo) + ", " + std::to_string(panel.hi) + "] at max depth");
    }
    const double mid = 0.5 * (panel.lo + panel.hi);
    stack.push_back({mid, panel.hi, panel.depth + 1});
    stack.push_back({panel.lo, mid, panel.depth + 1});
  }
  return result;
}

ComplexF cos_integral(unsigned n, double a, const QuadConfig& cfg) { return phased_integral(n, a, cfg).real(); }

ComplexF sin_integral(unsigned n, double a, const QuadConfig& cfg) { return phased_integral(n, a, cfg).imag(); }

ComplexF exp_integral(unsigned n, double a, const QuadConfig& cfg) {
  auto f = [n, a](double x) { return std::polar(power_sech(n, x), a * x); };
  return integrate_halfline(f, cfg, n).value;
}

CheckReport check_cos_identity(unsigned n, double a, const QuadConfig& cfg, double tol) {
  require_order(n, 8, "check_cos_identity");
  const double t = std::tanh(0.5 * kPi * a);
  const double rhs = std::pow(0.5 * kPi, n + 1) / std::cosh(0.5 * kPi * a) * eval_family(PolyFamily::Sech, n, t);
  return make_report("integral.cos", {{"n", n}, {"a", a}}, cos_integral(n, a, cfg), rhs, tol);
}

CheckReport check_sin_identity(unsigned n, double a, const QuadConfig& cfg, double tol) {
  require_order(n, 6, "check_sin_identity");
  const double t = std::tanh(0.5 * kPi * a);
  const ComplexF i{0.0, 1.0};
  const ComplexF psi_minus = polygamma(n, ComplexF(0.25, -0.25 * a));
  const ComplexF psi_plus = polygamma(n, ComplexF(0.25, 0.25 * a));
  const ComplexF digamma_part = i * std::ldexp(1.0, -static_cast<int>(2 * n + 1)) *
                                (rotate_quarter(3 * n, psi_minus) - rotate_quarter(n, psi_plus));
  const ComplexF rhs = -std::pow(0.5 * kPi, n + 1) * eval_family(PolyFamily::Tanh, n, t) + digamma_part;
  return make_report("integral.sin", {{"n", n}, {"a", a}}, sin_integral(n, a, cfg), rhs, tol);
}

CheckReport check_exp_identity(unsigned n, double a, const QuadConfig& cfg, double tol) {
  require_order(n, 6, "check_exp_identity");
  const double t = std::tanh(0.5 * kPi * a);
  const double sech = 1.0 / std::cosh(0.5 * kPi * a);
  const ComplexF bracket(sech * eval_family(PolyFamily::Sech, n, t), -eval_family(PolyFamily::Tanh, n, t));
  // (-1)^n i^n = (-i)^n = i^(3n)
  const ComplexF rhs = rotate_quarter(3 * n, std::pow(0.5 * kPi, n + 1) * bracket) + polygamma_pair(n, a);
  return make_report("integral.exp", {{"n", n}, {"a", a}}, exp_integral(n, a, cfg), rhs, tol);
}

CheckReport check_hoffman_integral(unsigned n, double a, HoffmanKernel kernel, const QuadConfig& cfg, double tol) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("check_hoffman_integral: a must lie in (0, 1)");
  if (kernel == HoffmanKernel::Minus && n == 0) throw DomainError("check_hoffman_integral: minus kernel needs n >= 1");
  const bool plus = kernel == HoffmanKernel::Plus;
  const int ni = static_cast<int>(n);

  // x^n e^{ax} / (e^x ± 1), written to avoid overflow on either side.
  auto kernel_value = [=](double x) -> double {
    if (x == 0.0) return plus ? (n == 0 ? 0.5 : 0.0) : (n == 1 ? 1.0 : 0.0);
    const double xn = std::pow(x, ni);
    if (x > 0) {
      const double decay = std::exp((a - 1.0) * x);
      return plus ? xn * decay / (1.0 + std::exp(-x)) : xn * decay / -std::expm1(-x);
    }
    const double growth = std::exp(a * x);
    return plus ? xn * growth / (std::exp(x) + 1.0) : xn * growth / std::expm1(x);
  };
  // Fold onto [0, ∞) and rescale by the slower of the two exponential decay rates.
  const double rate = std::min(a, 1.0 - a);
  auto folded = [=](double t) -> ComplexF {
    const double x = t / rate;
    return (kernel_value(x) + kernel_value(-x)) / rate;
  };
  QuadConfig scaled = cfg;
  scaled.truncation_margin += (n + 1) * std::log(1.0 / rate);
  const ComplexF lhs = integrate_halfline(folded, scaled, n).value;

  const double cot = std::cos(kPi * a) / std::sin(kPi * a);
  const double scale = std::pow(kPi, n + 1);
  const double rhs = plus ? scale / std::sin(kPi * a) * eval_family(PolyFamily::Sec, n, -cot)
                          : scale * eval_family(PolyFamily::Tan, n, -cot);
  return make_report(plus ? "integral.hoffman_plus" : "integral.hoffman_minus", {{"n", n}, {"a", a}}, lhs, rhs, tol);
}

std::vector<CheckReport> check_hoffman_integrals(unsigned n, double a, const QuadConfig& cfg, double tol) {
  std::vector<CheckReport> out;
  out.push_back(check_hoffman_integral(n, a, HoffmanKernel::Plus, cfg, tol));
  if (n >= 1) out.push_back(check_hoffman_integral(n, a, HoffmanKernel::Minus, cfg, tol));
  return out;
}

}  // namespace derivpoly
