#pragma once

// Exact scalar and polynomial arithmetic: big rationals, Gaussian rationals
// (a + b i with rational a, b) and dense univariate polynomials over them.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace derivpoly {

using BigInt = mpz_class;

BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);

/// Signed fraction kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "num/den" or "num" (optional leading '-'). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  /// "num/den", or "num" when the denominator is 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws std::domain_error on zero

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return cmp(lhs.value_, rhs.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

 private:
  mpq_class value_;
};

Rational pow(const Rational& base, unsigned exponent);
std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Complex number with rational real and imaginary parts.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_real() const { return im_.is_zero(); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  GaussRational conj() const { return {re_, -im_}; }

  GaussRational& operator+=(const GaussRational& rhs);
  GaussRational& operator-=(const GaussRational& rhs);
  GaussRational& operator*=(const GaussRational& rhs);
  GaussRational& operator/=(const GaussRational& rhs);

  friend GaussRational operator+(GaussRational lhs, const GaussRational& rhs) { return lhs += rhs; }
  friend GaussRational operator-(GaussRational lhs, const GaussRational& rhs) { return lhs -= rhs; }
  friend GaussRational operator*(GaussRational lhs, const GaussRational& rhs) { return lhs *= rhs; }
  friend GaussRational operator/(GaussRational lhs, const GaussRational& rhs) { return lhs /= rhs; }
  GaussRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussRational&, const GaussRational&) = default;

 private:
  Rational re_;
  Rational im_;
};

GaussRational pow(const GaussRational& base, unsigned exponent);
std::ostream& operator<<(std::ostream& os, const GaussRational& z);

/// Dense polynomial in one variable; coeffs()[j] multiplies z^j.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree() returns std::nullopt for it.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<GaussRational> coeffs);
  explicit Poly(const std::vector<Rational>& coeffs);

  static Poly constant(const GaussRational& c) { return Poly(std::vector<GaussRational>{c}); }
  static Poly monomial(const GaussRational& c, std::size_t degree);
  /// alpha*z + beta
  static Poly affine(const GaussRational& alpha, const GaussRational& beta);

  std::span<const GaussRational> coeffs() const { return coeffs_; }
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of z^j; zero past the degree.
  GaussRational coeff(std::size_t j) const;

  bool is_real() const;
  /// Real parts of the coefficients; throws ComplexResidue if any imaginary part is nonzero.
  std::vector<Rational> real_coeffs() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const GaussRational& scalar);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly lhs, const GaussRational& rhs) { return lhs *= rhs; }
  friend Poly operator*(const GaussRational& lhs, Poly rhs) { return rhs *= lhs; }
  Poly operator-() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();

  std::vector<GaussRational> coeffs_;
};

Poly derivative(const Poly& p);
/// p(alpha*z + beta), expanded.
Poly compose_affine(const Poly& p, const GaussRational& alpha, const GaussRational& beta);
/// Horner evaluation.
GaussRational evaluate(const Poly& p, const GaussRational& z);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace derivpoly
