#pragma once

// Verification suites driven by the `verify` subcommand. Each check yields one
// CheckReport; exact checks report residual 0 (equal) or 1 (different) with tol 0.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "derivpoly/quadcheck.hpp"

namespace derivpoly {

struct VerifyOptions {
  unsigned max_m = 30;
  std::optional<unsigned> n;  // restricts reflection / integral orders
  std::optional<unsigned> r;  // restricts the Eisenstein order
  std::optional<double> z;
  std::optional<double> a;
  std::optional<double> tol;  // overrides every numeric tolerance
  std::size_t terms = 100000;
  QuadConfig quad;
};

std::vector<CheckReport> verify_polys(const VerifyOptions& opts);
std::vector<CheckReport> verify_reflection(const VerifyOptions& opts);
std::vector<CheckReport> verify_eisenstein(const VerifyOptions& opts);
std::vector<CheckReport> verify_integrals(const VerifyOptions& opts);

/// suite is one of polys, reflection, eisenstein, integrals, all; std::nullopt otherwise.
std::optional<std::vector<CheckReport>> run_suite(std::string_view suite, const VerifyOptions& opts);

}  // namespace derivpoly
