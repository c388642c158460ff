#include "derivpoly/analytic.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "derivpoly/combinat.hpp"
#include "derivpoly/errors.hpp"

namespace derivpoly {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleGuard = 1e-12;
constexpr double kShiftTarget = 15.0;
constexpr int kBernoulliTerms = 12;

void require_finite(ComplexF z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(what) + ": non-finite argument");
  }
}

bool near_integer(ComplexF z) {
  return std::abs(z.imag()) < kPoleGuard && std::abs(z.real() - std::round(z.real())) < kPoleGuard;
}

ComplexF inverse_power(ComplexF w, unsigned s) {
  ComplexF p{1.0};
  for (unsigned i = 0; i < s; ++i) p *= w;
  return 1.0 / p;
}

// B_2, B_4, ..., B_24 as doubles.
const std::array<double, kBernoulliTerms>& even_bernoulli() {
  static const std::array<double, kBernoulliTerms> table = [] {
    std::array<double, kBernoulliTerms> t{};
    for (int j = 0; j < kBernoulliTerms; ++j) t[j] = bernoulli(2 * (j + 1)).to_double();
    return t;
  }();
  return table;
}

// ζ(s, a) by shifting and Euler-Maclaurin; the caller has excluded poles.
ComplexF hurwitz_shifted(unsigned s, ComplexF a) {
  ComplexF head{0.0};
  ComplexF b = a;
  while (b.real() < kShiftTarget) {
    head += inverse_power(b, s);
    b += 1.0;
  }
  const auto& bern = even_bernoulli();
  const double sd = s;
  ComplexF tail = inverse_power(b, s - 1) / (sd - 1.0) + 0.5 * inverse_power(b, s);
  // term_j = B_2j/(2j)! * s(s+1)...(s+2j-2) * b^(-s-2j+1)
  const ComplexF inv_b = 1.0 / b;
  const ComplexF inv_b2 = inv_b * inv_b;
  ComplexF power = inverse_power(b, s) * inv_b;  // b^(-s-1)
  double rising = sd;                             // s
  double fact = 2.0;                              // (2j)!
  for (int j = 1; j <= kBernoulliTerms; ++j) {
    tail += bern[j - 1] / fact * rising * power;
    rising *= (sd + 2 * j - 1) * (sd + 2 * j);
    fact *= (2.0 * j + 1) * (2.0 * j + 2);
    power *= inv_b2;
  }
  return head + tail;
}

ComplexF digamma(ComplexF z) {
  ComplexF shift{0.0};
  ComplexF w = z;
  while (w.real() < kShiftTarget) {
    shift += 1.0 / w;
    w += 1.0;
  }
  const auto& bern = even_bernoulli();
  const ComplexF inv_w2 = 1.0 / (w * w);
  ComplexF power = inv_w2;
  ComplexF series = std::log(w) - 0.5 / w;
  for (int j = 1; j <= kBernoulliTerms; ++j) {
    series -= bern[j - 1] / (2.0 * j) * power;
    power *= inv_w2;
  }
  return series - shift;
}

const std::vector<double>& tan_coeffs(unsigned m) {
  // Small per-thread table so repeated numeric evaluations do not rebuild P_m.
  thread_local std::vector<std::vector<double>> cache;
  while (cache.size() <= m) {
    cache.push_back(to_doubles(family_poly(PolyFamily::Tan, static_cast<unsigned>(cache.size())).poly));
  }
  return cache[m];
}

std::string format_coefficient(const Rational& c, bool has_factor) {
  const Rational mag = c.sign() < 0 ? -c : c;
  if (mag == Rational(1) && has_factor) return "";
  std::string s = mag.to_string();
  if (!mag.is_integer()) s = "(" + s + ")";
  return has_factor ? s + " " : s;
}

}  // namespace

std::vector<double> to_doubles(const Poly& p) {
  std::vector<double> out;
  for (const auto& c : p.real_coeffs()) out.push_back(c.to_double());
  return out;
}

// ---------------------------------------------------------------------------
// Eisenstein series

ComplexF EisensteinExpansion::evaluate(ComplexF e1) const {
  ComplexF acc{0.0};
  for (const auto& [j, c] : terms) acc += c.to_double() * std::pow(kPi, static_cast<int>(r - j)) * std::pow(e1, static_cast<int>(j));
  return acc;
}

std::string EisensteinExpansion::to_string() const {
  std::ostringstream os;
  os << "e_" << r << " =";
  bool first = true;
  for (const auto& [j, c] : terms) {
    const unsigned pi_power = r - j;
    std::string factors;
    if (pi_power > 0) factors += pi_power == 1 ? "pi" : "pi^" + std::to_string(pi_power);
    if (j > 0) {
      if (!factors.empty()) factors += " ";
      factors += j == 1 ? "e_1" : "e_1^" + std::to_string(j);
    }
    if (first) {
      os << (c.sign() < 0 ? " -" : " ");
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    os << format_coefficient(c, !factors.empty()) << factors;
  }
  if (first) os << " 0";
  return os.str();
}

ComplexF eisenstein_direct(unsigned r, ComplexF z, std::size_t terms) {
  require_finite(z, "eisenstein_direct");
  if (r == 0) throw DomainError("eisenstein_direct: r must be >= 1");
  if (near_integer(z)) throw PoleError("eisenstein_direct: z is an integer");
  ComplexF acc{0.0};
  // Smallest terms first.
  for (std::size_t k = terms; k >= 1; --k) {
    const double kd = static_cast<double>(k);
    if (r == 1) {
      acc += 2.0 * z / (z * z - kd * kd);
    } else {
      acc += inverse_power(z + kd, r) + inverse_power(z - kd, r);
    }
  }
  return acc + inverse_power(z, r);
}

double eisenstein_tail_bound(unsigned r, ComplexF z, std::size_t terms) {
  const double gap = static_cast<double>(terms) - std::abs(z);
  if (gap <= 0) return INFINITY;
  // |2z/(z^2-k^2)| <= 2|z|/(k-|z|)^2 and |z±k|^-r <= (k-|z|)^-r, summed past K.
  if (r == 1) return 2.0 * std::abs(z) / gap;
  return 2.0 / ((r - 1.0) * std::pow(gap, r - 1.0));
}

EisensteinExpansion eisenstein_expansion(unsigned r) {
  if (r == 0) throw DomainError("eisenstein_expansion: r must be >= 1");
  // e_r = (-1)^r pi^r / (r-1)! * P_{r-1}(-e_1/pi)
  const auto coeffs = family_poly(PolyFamily::Tan, r - 1).poly.real_coeffs();
  const Rational scale = Rational(BigInt(1), factorial(r - 1));
  EisensteinExpansion out;
  out.r = r;
  for (unsigned j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    Rational c = coeffs[j] * scale;
    if ((r + j) % 2 == 1) c = -c;
    out.terms.emplace_back(j, std::move(c));
  }
  return out;
}

ComplexF eisenstein_csc_form(unsigned r, double z) {
  if (r < 2) throw DomainError("eisenstein_csc_form: r must be >= 2");
  if (near_integer(z)) throw PoleError("eisenstein_csc_form: z is an integer");
  const double s = std::sin(kPi * z);
  const double cot = std::cos(kPi * z) / s;
  const ComplexF i{0.0, 1.0};
  const ComplexF base = i * cot - 1.0;
  ComplexF sum{0.0};
  ComplexF power{1.0};
  for (unsigned k = 1; k <= r - 1; ++k) {
    sum += stirling2(r - 1, k).get_d() * std::ldexp(1.0, static_cast<int>(r - k - 1)) * factorial(k).get_d() * power;
    power *= base;
  }
  // (-i)^r, not i^r: e_r = (-1)^r pi^r / (r-1)! P_{r-1}(-cot pi z).
  return -std::pow(-i, static_cast<int>(r)) * std::pow(kPi, r) / factorial(r - 1).get_d() / (s * s) * sum;
}

// ---------------------------------------------------------------------------
// Polygamma

ComplexF hurwitz_zeta(unsigned s, ComplexF a) {
  require_finite(a, "hurwitz_zeta");
  if (s < 2) throw DomainError("hurwitz_zeta: s must be >= 2");
  if (a.real() <= 0) throw DomainError("hurwitz_zeta: Re(a) must be positive");
  return hurwitz_shifted(s, a);
}

ComplexF polygamma(unsigned n, ComplexF z) {
  require_finite(z, "polygamma");
  if (near_integer(z) && std::round(z.real()) <= 0) throw PoleError("polygamma: nonpositive integer argument");
  if (n == 0) return digamma(z);
  // ψ_n(z) = (-1)^(n+1) n! ζ(n+1, z); the shifted sum is valid off the poles for any Re(z).
  const double sign = (n % 2 == 1) ? 1.0 : -1.0;
  return sign * factorial(n).get_d() * hurwitz_shifted(n + 1, z);
}

double reflection_lhs(unsigned n, double z) {
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return (polygamma(n, z) - sign * polygamma(n, 1.0 - z)).real();
}

double reflection_rhs(unsigned n, double z) {
  if (!(z > 0.0 && z < 1.0)) throw DomainError("reflection_rhs: z must lie in (0, 1)");
  const double cot = std::cos(kPi * z) / std::sin(kPi * z);
  return std::pow(kPi, n + 1) * horner<double>(tan_coeffs(n), -cot);
}

ComplexF reflection_rhs_csc_form(unsigned n, double z) {
  if (n == 0) throw DomainError("reflection_rhs_csc_form: n must be >= 1");
  if (!(z > 0.0 && z < 1.0)) throw DomainError("reflection_rhs_csc_form: z must lie in (0, 1)");
  const double s = std::sin(kPi * z);
  const double cot = std::cos(kPi * z) / s;
  const ComplexF i{0.0, 1.0};
  const ComplexF base = i * cot - 1.0;
  ComplexF sum{0.0};
  ComplexF power{1.0};
  for (unsigned k = 1; k <= n; ++k) {
    sum += stirling2(n, k).get_d() * std::ldexp(1.0, static_cast<int>(n - k)) * factorial(k).get_d() * power;
    power *= base;
  }
  return -std::pow(i, static_cast<int>(n + 1)) * std::pow(kPi, n + 1) / (s * s) * sum;
}

// ---------------------------------------------------------------------------
// csc / csch and the generic family derivative

double csc_high_derivative(unsigned m, double theta) {
  if (!std::isfinite(theta)) throw DomainError("csc_high_derivative: non-finite argument");
  if (std::abs(theta - kPi * std::round(theta / kPi)) < kPoleGuard) throw PoleError("csc_high_derivative: sin(theta) = 0");
  const double half = 0.5 * theta;
  const auto& p = tan_coeffs(m);
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  return std::ldexp(horner<double>(p, std::tan(half)) + sign * horner<double>(p, 1.0 / std::tan(half)),
                    -static_cast<int>(m + 1));
}

double csch_high_derivative(unsigned m, double theta) {
  if (!std::isfinite(theta)) throw DomainError("csch_high_derivative: non-finite argument");
  if (std::abs(theta) < kPoleGuard) throw PoleError("csch_high_derivative: theta = 0");
  const auto s = to_doubles(family_poly(PolyFamily::Csch, m).poly);
  return horner<double>(s, 1.0 / std::tanh(theta)) / std::sinh(theta);
}

double family_function(PolyFamily family, double theta) {
  switch (family) {
    case PolyFamily::Tanh: return std::tanh(theta);
    case PolyFamily::Coth: return 1.0 / std::tanh(theta);
    case PolyFamily::Tan: return std::tan(theta);
    case PolyFamily::Cot: return 1.0 / std::tan(theta);
    case PolyFamily::Sech: return 1.0 / std::cosh(theta);
    case PolyFamily::Csch: return 1.0 / std::sinh(theta);
    case PolyFamily::Sec: return 1.0 / std::cos(theta);
  }
  return NAN;
}

double family_derivative(PolyFamily family, unsigned m, double theta) {
  if (!std::isfinite(theta)) throw DomainError("family_derivative: non-finite argument");
  auto near_multiple = [theta](double offset, double period) {
    const double shifted = theta - offset;
    return std::abs(shifted - period * std::round(shifted / period)) < kPoleGuard;
  };
  bool pole = false;
  switch (family) {
    case PolyFamily::Coth:
    case PolyFamily::Csch: pole = std::abs(theta) < kPoleGuard; break;
    case PolyFamily::Cot: pole = near_multiple(0.0, kPi); break;
    case PolyFamily::Tan:
    case PolyFamily::Sec: pole = near_multiple(0.5 * kPi, kPi); break;
    case PolyFamily::Tanh:
    case PolyFamily::Sech: break;
  }
  if (pole) throw PoleError(std::string(family_name(family)) + " has a pole at theta");
  const auto coeffs = to_doubles(family_poly(family, m).poly);
  double argument = 0.0;
  double prefactor = 1.0;
  switch (family) {
    case PolyFamily::Tanh:
    case PolyFamily::Coth:
    case PolyFamily::Tan:
    case PolyFamily::Cot: argument = family_function(family, theta); break;
    case PolyFamily::Sech:
      argument = std::tanh(theta);
      prefactor = family_function(family, theta);
      break;
    case PolyFamily::Csch:
      argument = 1.0 / std::tanh(theta);
      prefactor = family_function(family, theta);
      break;
    case PolyFamily::Sec:
      argument = std::tan(theta);
      prefactor = family_function(family, theta);
      break;
  }
  if (!std::isfinite(argument) || !std::isfinite(prefactor)) {
    throw PoleError(std::string(family_name(family)) + " has a pole at theta");
  }
  return prefactor * horner<double>(coeffs, argument);
}

}  // namespace derivpoly
