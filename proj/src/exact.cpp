#include "derivpoly/exact.hpp"

#include <algorithm>
#include <stdexcept>

#include "derivpoly/errors.hpp"

namespace derivpoly {

BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty integer");
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("Rational::parse: bare sign");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("Rational::parse: bad digit in '" + std::string(s) + "'");
    }
    if (s.front() == '+') s.remove_prefix(1);
    return BigInt(std::string(s), 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("Rational::parse: zero denominator");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

Rational pow(const Rational& base, unsigned exponent) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), exponent);
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

// ---------------------------------------------------------------------------
// GaussRational

GaussRational& GaussRational::operator+=(const GaussRational& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& rhs) {
  if (rhs.is_real()) {
    re_ *= rhs.re_;
    im_ *= rhs.re_;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& rhs) {
  Rational norm = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
  if (norm.is_zero()) throw std::domain_error("GaussRational: division by zero");
  *this *= rhs.conj();
  re_ /= norm;
  im_ /= norm;
  return *this;
}

GaussRational pow(const GaussRational& base, unsigned exponent) {
  GaussRational result(1);
  GaussRational square = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent != 0) square *= square;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) {
  if (z.is_real()) return os << z.re();
  return os << '(' << z.re() << (z.im().sign() < 0 ? " - " : " + ") << (z.im().sign() < 0 ? -z.im() : z.im()) << "i)";
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<GaussRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(const std::vector<Rational>& coeffs) : coeffs_(coeffs.begin(), coeffs.end()) { trim(); }

Poly Poly::monomial(const GaussRational& c, std::size_t degree) {
  std::vector<GaussRational> coeffs(degree + 1);
  coeffs[degree] = c;
  return Poly(std::move(coeffs));
}

Poly Poly::affine(const GaussRational& alpha, const GaussRational& beta) {
  return Poly(std::vector<GaussRational>{beta, alpha});
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

GaussRational Poly::coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : GaussRational(); }

bool Poly::is_real() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const GaussRational& c) { return c.is_real(); });
}

std::vector<Rational> Poly::real_coeffs() const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (!coeffs_[j].is_real()) {
      throw ComplexResidue("coefficient of z^" + std::to_string(j) + " has imaginary part " +
                           coeffs_[j].im().to_string());
    }
    out.push_back(coeffs_[j].re());
  }
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  trim();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<GaussRational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const GaussRational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly derivative(const Poly& p) {
  auto coeffs = p.coeffs();
  if (coeffs.size() <= 1) return {};
  std::vector<GaussRational> out;
  out.reserve(coeffs.size() - 1);
  for (std::size_t j = 1; j < coeffs.size(); ++j) out.push_back(coeffs[j] * GaussRational(static_cast<long>(j)));
  return Poly(std::move(out));
}

Poly compose_affine(const Poly& p, const GaussRational& alpha, const GaussRational& beta) {
  const Poly inner = Poly::affine(alpha, beta);
  Poly result;
  auto coeffs = p.coeffs();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    result = result * inner + Poly::constant(*it);
  }
  return result;
}

GaussRational evaluate(const Poly& p, const GaussRational& z) {
  GaussRational acc;
  auto coeffs = p.coeffs();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  auto coeffs = p.coeffs();
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs[j];
    if (j > 0) os << "*z^" << j;
  }
  return os;
}

}  // namespace derivpoly
