#include "derivpoly/combinat.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

#include "derivpoly/errors.hpp"

namespace derivpoly {

StirlingTriangle::StirlingTriangle(unsigned max_n) {
  rows_.reserve(max_n + 1);
  rows_.push_back({BigInt(1)});
  for (unsigned n = 1; n <= max_n; ++n) {
    const auto& prev = rows_.back();
    std::vector<BigInt> row(n + 1);
    row[0] = 0;
    for (unsigned k = 1; k <= n; ++k) {
      BigInt carried = k < prev.size() ? BigInt(k * prev[k]) : BigInt(0);
      row[k] = carried + prev[k - 1];
    }
    rows_.push_back(std::move(row));
  }
}

BigInt StirlingTriangle::operator()(unsigned n, unsigned k) const {
  if (k > n) return 0;
  return rows_.at(n)[k];
}

namespace {

// Grown on demand; rebuilt wholesale under the lock since rows are cheap.
struct StirlingCache {
  std::mutex mutex;
  StirlingTriangle triangle{32};
};

struct BernoulliCache {
  std::mutex mutex;
  std::vector<Rational> values{Rational(1)};
};

Rational checked_integer(Rational value, const char* what, unsigned index) {
  if (!value.is_integer()) {
    throw NonIntegerResult(std::string(what) + "(" + std::to_string(index) + ") = " + value.to_string() +
                           " is not an integer");
  }
  return value;
}

BigInt pow2(unsigned e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

}  // namespace

BigInt stirling2(unsigned n, unsigned k) {
  static StirlingCache cache;
  if (k > n) return 0;
  std::lock_guard lock(cache.mutex);
  if (n > cache.triangle.max_n()) cache.triangle = StirlingTriangle(std::max(n, 2 * cache.triangle.max_n()));
  return cache.triangle(n, k);
}

Rational bernoulli(unsigned n) {
  static BernoulliCache cache;
  std::lock_guard lock(cache.mutex);
  auto& b = cache.values;
  for (auto m = static_cast<unsigned>(b.size()); m <= n; ++m) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0  =>  B_m = -1/(m+1) sum_{j<m} C(m+1, j) B_j
    Rational acc;
    for (unsigned j = 0; j < m; ++j) {
      if (b[j].is_zero()) continue;
      acc += Rational(binomial(m + 1, j)) * b[j];
    }
    b.push_back(-acc / Rational(static_cast<long>(m + 1)));
  }
  return b[n];
}

Rational euler_number(unsigned m) {
  Rational acc;
  for (unsigned k = 1; k <= m + 1; ++k) {
    const BigInt two_k = pow2(k);
    acc += Rational(binomial(m + 1, k) * two_k * (1 - two_k)) * bernoulli(k);
  }
  return checked_integer(acc / Rational(static_cast<long>(m + 1)), "euler_number", m);
}

Rational tangent_number(unsigned k) {
  if (k == 0) throw std::invalid_argument("tangent_number: k must be >= 1");
  const BigInt four_k = pow2(2 * k);
  Rational value = Rational(four_k * (four_k - 1)) * bernoulli(2 * k) / Rational(static_cast<long>(2 * k));
  if (k % 2 == 0) value = -value;
  return checked_integer(std::move(value), "tangent_number", k);
}

Rational tanh_center_value(unsigned m) {
  if (m == 0) throw std::invalid_argument("tanh_center_value: m must be >= 1");
  const BigInt two = pow2(m + 1);
  Rational value = Rational(two * (1 - two)) * bernoulli(m + 1) / Rational(static_cast<long>(m + 1));
  return m % 2 == 0 ? value : -value;
}

}  // namespace derivpoly
