#pragma once

// Derivative polynomials of the hyperbolic and circular tangent/secant
// families, built from Stirling-number closed forms.
//
//   (d/dθ)^m tanh θ = C_m(tanh θ)          (d/dθ)^m coth θ = C_m(coth θ)
//   (d/dθ)^m tan θ  = P_m(tan θ)           (d/dθ)^m cot θ  = -P_m(-cot θ)
//   (d/dθ)^m sech θ = sech θ S_m(tanh θ)   (d/dθ)^m csch θ = csch θ S_m(coth θ)
//   (d/dθ)^m sec θ  = sec θ Q_m(tan θ)
//
// At m = 0 every family returns the polynomial fixed by the defining
// relation: z for the tangent-like families and 1 for the secant-like ones.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "derivpoly/exact.hpp"

namespace derivpoly {

enum class PolyFamily { Tanh, Coth, Tan, Cot, Sech, Csch, Sec };

inline constexpr std::array<PolyFamily, 7> kAllFamilies = {
    PolyFamily::Tanh, PolyFamily::Coth, PolyFamily::Tan, PolyFamily::Cot,
    PolyFamily::Sech, PolyFamily::Csch, PolyFamily::Sec};

std::string_view family_name(PolyFamily family);
std::optional<PolyFamily> parse_family(std::string_view name);

/// True for tanh/coth/tan/cot (degree m+1), false for sech/csch/sec (degree m).
bool is_tangent_like(PolyFamily family);

struct FamilyResult {
  PolyFamily family;
  unsigned m;
  Poly poly;  // real coefficients
};

/// Geometric polynomial ω_n(x) = sum_k {n k} k! x^k.
Poly geometric_poly(unsigned n);

/// p_m(z; a, b) = sum_k C(m, k) a^(m-k) b^k ω_k(z), with 0^0 = 1.
Poly general_poly(unsigned m, const GaussRational& a, const GaussRational& b);

/// The m-th derivative polynomial of the family, from the explicit formulas.
/// Throws ComplexResidue if the Gaussian-rational construction fails to come out real.
FamilyResult family_poly(PolyFamily family, unsigned m);

/// Independent route: given the family's m-th polynomial, the (m+1)-th by the
/// chain rule applied to the defining relation.
Poly family_next_oracle(PolyFamily family, const Poly& p);

/// The family polynomial at z = 0, from the Stirling closed forms (not by evaluating the polynomial).
Rational center_value(PolyFamily family, unsigned m);

}  // namespace derivpoly
