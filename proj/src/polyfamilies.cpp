#include "derivpoly/polyfamilies.hpp"

#include <string>

#include "derivpoly/combinat.hpp"
#include "derivpoly/errors.hpp"

namespace derivpoly {

std::string_view family_name(PolyFamily family) {
  switch (family) {
    case PolyFamily::Tanh: return "tanh";
    case PolyFamily::Coth: return "coth";
    case PolyFamily::Tan: return "tan";
    case PolyFamily::Cot: return "cot";
    case PolyFamily::Sech: return "sech";
    case PolyFamily::Csch: return "csch";
    case PolyFamily::Sec: return "sec";
  }
  return "?";
}

std::optional<PolyFamily> parse_family(std::string_view name) {
  for (PolyFamily f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

bool is_tangent_like(PolyFamily family) {
  switch (family) {
    case PolyFamily::Tanh:
    case PolyFamily::Coth:
    case PolyFamily::Tan:
    case PolyFamily::Cot: return true;
    default: return false;
  }
}

Poly geometric_poly(unsigned n) {
  std::vector<GaussRational> coeffs(n + 1);
  for (unsigned k = 0; k <= n; ++k) coeffs[k] = Rational(stirling2(n, k) * factorial(k));
  return Poly(std::move(coeffs));
}

Poly general_poly(unsigned m, const GaussRational& a, const GaussRational& b) {
  Poly out;
  for (unsigned k = 0; k <= m; ++k) {
    // pow(x, 0) == 1 also for x == 0, which is the 0^0 = 1 convention needed at a = 0, k = m.
    GaussRational weight = Rational(binomial(m, k)) * pow(a, m - k) * pow(b, k);
    if (weight.is_zero()) continue;
    out += geometric_poly(k) * weight;
  }
  return out;
}

namespace {

const GaussRational kI = GaussRational::i();
const Poly kZ = Poly::monomial(1, 1);

GaussRational signed_pow2(unsigned m) { return pow(GaussRational(-2), m); }

Poly require_real(Poly p, PolyFamily family, unsigned m) {
  try {
    (void)p.real_coeffs();
  } catch (const ComplexResidue& e) {
    throw ComplexResidue(std::string(family_name(family)) + " m=" + std::to_string(m) + ": " + e.what());
  }
  return p;
}

// C_m(z) = (-2)^m (z + 1) ω_m((z - 1)/2), m >= 1.
Poly tanh_poly(unsigned m) {
  if (m == 0) return kZ;
  Poly omega = compose_affine(geometric_poly(m), Rational(BigInt(1), BigInt(2)), Rational(BigInt(-1), BigInt(2)));
  return Poly::affine(1, 1) * omega * signed_pow2(m);
}

// P_m(z) = -i^(m+1) (-2)^m (iz + 1) ω_m((iz - 1)/2), m >= 1.
Poly tan_poly(unsigned m) {
  if (m == 0) return kZ;
  const GaussRational half(Rational(BigInt(1), BigInt(2)));
  Poly omega = compose_affine(geometric_poly(m), kI * half, -half);
  return Poly::affine(kI, 1) * omega * (-pow(kI, m + 1) * signed_pow2(m));
}

// S_m(z) = p_m(-(1 + z)/2; 1, 2).
Poly sech_poly(unsigned m) {
  const GaussRational minus_half(Rational(BigInt(-1), BigInt(2)));
  return compose_affine(general_poly(m, 1, 2), minus_half, minus_half);
}

// sum_k (-1)^k {m k} k! / 2^k  =  ω_m(-1/2)
Rational omega_at_minus_half(unsigned m) {
  Rational acc;
  for (unsigned k = 0; k <= m; ++k) {
    Rational term = Rational(stirling2(m, k) * factorial(k)) / Rational(BigInt(1) << k);
    acc += (k % 2 == 0) ? term : -term;
  }
  return acc;
}

Rational real_or_throw(const GaussRational& z, std::string_view what, unsigned m) {
  if (!z.is_real()) {
    throw ComplexResidue(std::string(what) + "(" + std::to_string(m) + ") has imaginary part " + z.im().to_string());
  }
  return z.re();
}

}  // namespace

FamilyResult family_poly(PolyFamily family, unsigned m) {
  Poly p;
  switch (family) {
    case PolyFamily::Tanh:
    case PolyFamily::Coth: p = tanh_poly(m); break;
    case PolyFamily::Tan: p = tan_poly(m); break;
    // -P_m(-z)
    case PolyFamily::Cot: p = -compose_affine(tan_poly(m), -1, 0); break;
    case PolyFamily::Sech:
    case PolyFamily::Csch: p = sech_poly(m); break;
    // Q_m(z) = i^m S_m(iz)
    case PolyFamily::Sec: p = compose_affine(sech_poly(m), kI, 0) * pow(kI, m); break;
  }
  return {family, m, require_real(std::move(p), family, m)};
}

Poly family_next_oracle(PolyFamily family, const Poly& p) {
  const Poly one_minus_z2(std::vector<GaussRational>{1, 0, -1});
  const Poly one_plus_z2(std::vector<GaussRational>{1, 0, 1});
  const Poly z = Poly::monomial(1, 1);
  const Poly dp = derivative(p);
  switch (family) {
    case PolyFamily::Tanh:
    case PolyFamily::Coth: return one_minus_z2 * dp;
    case PolyFamily::Tan: return one_plus_z2 * dp;
    case PolyFamily::Cot: return -(one_plus_z2 * dp);
    case PolyFamily::Sech:
    case PolyFamily::Csch: return one_minus_z2 * dp - z * p;
    case PolyFamily::Sec: return one_plus_z2 * dp + z * p;
  }
  return {};
}

Rational center_value(PolyFamily family, unsigned m) {
  switch (family) {
    case PolyFamily::Tanh:
    case PolyFamily::Coth: {
      if (m == 0) return 0;
      return real_or_throw(signed_pow2(m) * omega_at_minus_half(m), "C", m);
    }
    case PolyFamily::Tan:
    case PolyFamily::Cot: {
      if (m == 0) return 0;
      Rational value = real_or_throw(-pow(kI, m + 1) * signed_pow2(m) * omega_at_minus_half(m), "P", m);
      return family == PolyFamily::Tan ? value : -value;
    }
    case PolyFamily::Sech:
    case PolyFamily::Csch:
    case PolyFamily::Sec: {
      // E_m = sum_k C(m, k) 2^k ω_k(-1/2)
      Rational euler;
      for (unsigned k = 0; k <= m; ++k) euler += Rational(binomial(m, k) << k) * omega_at_minus_half(k);
      if (family != PolyFamily::Sec) return euler;
      return real_or_throw(pow(kI, m) * euler, "Q", m);
    }
  }
  return 0;
}

}  // namespace derivpoly
