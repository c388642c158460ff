#pragma once

#include <cstddef>
#include <vector>

#include "derivpoly/exact.hpp"

namespace derivpoly {

/// Rows 0..n of the Stirling triangle of the second kind, rows[n][k] = {n k}.
class StirlingTriangle {
 public:
  explicit StirlingTriangle(unsigned max_n);

  unsigned max_n() const { return static_cast<unsigned>(rows_.size() - 1); }
  const std::vector<BigInt>& row(unsigned n) const { return rows_.at(n); }
  /// {n k}; zero when k > n.
  BigInt operator()(unsigned n, unsigned k) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

/// Stirling number of the second kind, served from a shared memoized triangle.
BigInt stirling2(unsigned n, unsigned k);

/// Bernoulli number B_n with B_1 = -1/2, from sum_{j=0}^{n} C(n+1, j) B_j = 0.
Rational bernoulli(unsigned n);

/// Euler number E_m, the m-th Maclaurin coefficient of sech times m!.
///
/// Computed from the Bernoulli sum
///   E_m = 1/(m+1) * sum_{k=1}^{m+1} C(m+1, k) 2^k (1 - 2^k) B_k
/// and checked to be an integer (throws NonIntegerResult otherwise).
Rational euler_number(unsigned m);

/// Tangent number P_{2k-1}(0) = (-1)^{k+1} 2^{2k} (2^{2k} - 1) B_{2k} / (2k), k >= 1.
Rational tangent_number(unsigned k);

/// C_m(0) = (-1)^m 2^{m+1} (1 - 2^{m+1}) B_{m+1} / (m+1), the m-th derivative of tanh at 0.
/// Requires m >= 1 (throws std::invalid_argument).
Rational tanh_center_value(unsigned m);

}  // namespace derivpoly
