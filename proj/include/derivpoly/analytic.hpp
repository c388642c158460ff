#pragma once

// Floating-point evaluation of the analytic identities built on the exact
// derivative polynomials: Eisenstein series, polygamma and its reflection
// formula, and high derivatives of csc / csch.

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "derivpoly/exact.hpp"
#include "derivpoly/polyfamilies.hpp"

namespace derivpoly {

using ComplexF = std::complex<double>;

/// Real coefficients of an exact polynomial as doubles (throws ComplexResidue if not real).
std::vector<double> to_doubles(const Poly& p);

template <typename T>
T horner(std::span<const double> coeffs, T x) {
  T acc{0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + T(*it);
  return acc;
}

/// e_r written as a polynomial in e_1: e_r = sum_j c_j pi^(r-j) e_1^j.
struct EisensteinExpansion {
  unsigned r = 1;
  std::vector<std::pair<unsigned, Rational>> terms;  // (j, c_j), ascending j, c_j != 0

  ComplexF evaluate(ComplexF e1) const;
  /// e.g. "e_2 = pi^2 + e_1^2"
  std::string to_string() const;
};

/// Symmetric partial sum 1/z^r + sum_{k=1}^{K} [(z+k)^-r + (z-k)^-r].
///
/// The neglected tail is O(K^(1-r)) for r >= 2 and O(1/K) for r = 1, where
/// the pairing of +k and -k is what makes the series converge at all.
/// Throws PoleError within 1e-12 of an integer.
ComplexF eisenstein_direct(unsigned r, ComplexF z, std::size_t terms);

/// Upper bound on |e_r(z) - eisenstein_direct(r, z, K)| for |z| < K.
double eisenstein_tail_bound(unsigned r, ComplexF z, std::size_t terms);

EisensteinExpansion eisenstein_expansion(unsigned r);

/// e_r(z) = -(-i)^r pi^r / (r-1)! csc^2(pi z) sum_{k=1}^{r-1} {r-1 k} 2^(r-k-1) k! (i cot pi z - 1)^(k-1), r >= 2.
ComplexF eisenstein_csc_form(unsigned r, double z);

/// Hurwitz zeta ζ(s, a) for integer s >= 2 and Re(a) > 0 (DomainError otherwise).
///
/// Sums terms until Re(a + N) >= 15, then closes with Euler-Maclaurin using
/// 12 Bernoulli corrections; relative error is around 1e-14.
ComplexF hurwitz_zeta(unsigned s, ComplexF a);

/// ψ_n(z) = (d/dz)^(n+1) log Γ(z). PoleError at nonpositive integers.
ComplexF polygamma(unsigned n, ComplexF z);

/// ψ_n(z) - (-1)^n ψ_n(1 - z), computed from polygamma.
double reflection_lhs(unsigned n, double z);
/// π^(n+1) P_n(-cot πz), 0 < z < 1.
double reflection_rhs(unsigned n, double z);
/// -i^(n+1) π^(n+1) csc^2(πz) sum_{k=1}^{n} {n k} 2^(n-k) k! (i cot πz - 1)^(k-1), n >= 1.
ComplexF reflection_rhs_csc_form(unsigned n, double z);

/// (d/dθ)^m csc θ = [P_m(tan θ/2) + (-1)^m P_m(cot θ/2)] / 2^(m+1).
double csc_high_derivative(unsigned m, double theta);
/// (d/dθ)^m csch θ = csch θ S_m(coth θ).
double csch_high_derivative(unsigned m, double theta);

/// (d/dθ)^m of the family's base function (tanh, coth, tan, cot, sech, csch, sec) at θ.
/// PoleError within 1e-12 of a pole of the base function.
double family_derivative(PolyFamily family, unsigned m, double theta);
/// The base function itself (m = 0 of family_derivative without the polynomial).
double family_function(PolyFamily family, double theta);

}  // namespace derivpoly
