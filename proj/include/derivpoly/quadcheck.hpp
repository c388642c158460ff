#pragma once

// Numerical checks of the half-line integral identities whose closed forms
// are built from the derivative polynomials and polygamma.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "derivpoly/analytic.hpp"

namespace derivpoly {

struct QuadConfig {
  double abs_tol = 1e-12;         // >= 1e-13
  unsigned max_depth = 48;        // <= 60
  double truncation_margin = 0.0; // extra e-folds added to the tail bound

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

struct QuadResult {
  ComplexF value;
  double error_estimate = 0.0;
};

/// Result of one identity check. residual = |lhs - rhs| / max(1, |rhs|).
struct CheckReport {
  std::string identity_id;
  std::map<std::string, double> params;
  ComplexF lhs;
  ComplexF rhs;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

CheckReport make_report(std::string id, std::map<std::string, double> params, ComplexF lhs, ComplexF rhs, double tol);

using Integrand = std::function<ComplexF(double)>;

/// Integral of f over [0, inf) for integrands bounded by C x^n e^{-x}.
///
/// The range is cut at x_max = max(40, n ln n + 40), pushed further if
/// x^n e^{-x + margin} is still above abs_tol / 10 there, and [0, x_max] is
/// integrated by adaptive Gauss-Kronrod (7/15) bisection. Throws
/// ConvergenceError when an interval at max_depth still misses its share of
/// abs_tol.
QuadResult integrate_halfline(const Integrand& f, const QuadConfig& cfg, unsigned growth_power = 0);

/// Default tolerances for the check_* family.
inline constexpr double kCosTol = 1e-8;
inline constexpr double kSinTol = 1e-7;
inline constexpr double kExpTol = 1e-7;
inline constexpr double kHoffmanTol = 1e-7;

/// ∫_0^∞ x^n cos(ax + πn/2) / cosh x dx  vs  (π/2)^(n+1) sech(πa/2) S_n(tanh(πa/2)).  n <= 8.
CheckReport check_cos_identity(unsigned n, double a, const QuadConfig& cfg, double tol = kCosTol);

/// ∫_0^∞ x^n sin(ax + πn/2) / cosh x dx  vs  -(π/2)^(n+1) C_n(tanh(πa/2))
///   + i/2^(2n+1) [(-i)^n ψ_n((1-ia)/4) - i^n ψ_n((1+ia)/4)].  n <= 6.
CheckReport check_sin_identity(unsigned n, double a, const QuadConfig& cfg, double tol = kSinTol);

/// ∫_0^∞ x^n e^{iax} / cosh x dx  vs  (-i)^n (π/2)^(n+1) [sech S_n(t) - i C_n(t)]
///   + [ψ_n((1+ia)/4) - (-1)^n ψ_n((1-ia)/4)] / 2^(2n+1),  t = tanh(πa/2).  n <= 6.
CheckReport check_exp_identity(unsigned n, double a, const QuadConfig& cfg, double tol = kExpTol);

enum class HoffmanKernel {
  Plus,   // x^n e^{ax} / (e^x + 1) = π^(n+1) csc(aπ) Q_n(-cot aπ), n >= 0
  Minus,  // x^n e^{ax} / (e^x - 1) = π^(n+1) P_n(-cot aπ),          n >= 1
};

/// Whole-line integral check for 0 < a < 1 (DomainError otherwise).
CheckReport check_hoffman_integral(unsigned n, double a, HoffmanKernel kernel, const QuadConfig& cfg,
                                   double tol = kHoffmanTol);

/// Both kernels where defined (the minus kernel only for n >= 1).
std::vector<CheckReport> check_hoffman_integrals(unsigned n, double a, const QuadConfig& cfg, double tol = kHoffmanTol);

/// The x^n / cosh x integrals are raw quadratures, exposed for consistency checks.
ComplexF cos_integral(unsigned n, double a, const QuadConfig& cfg);
ComplexF sin_integral(unsigned n, double a, const QuadConfig& cfg);
ComplexF exp_integral(unsigned n, double a, const QuadConfig& cfg);

}  // namespace derivpoly
