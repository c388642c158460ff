#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "derivpoly/exact.hpp"
#include "derivpoly/polyfamilies.hpp"
#include "derivpoly/quadcheck.hpp"

namespace derivpoly {

enum class OutputFormat { Plain, Latex, Json, Csv };

std::optional<OutputFormat> parse_format(std::string_view name);

/// Descending degree, zero terms omitted, e.g. "2z^3 - 2z" or "(1/3)z^2 + 1".
std::string render_poly_plain(const std::vector<Rational>& coeffs);
/// e.g. "2z^{3} - 2z" or "\frac{1}{3}z^{2} + 1".
std::string render_poly_latex(const std::vector<Rational>& coeffs);

/// {"family": str, "m": int, "coefficients": ["num/den", ...]} with ascending degree.
nlohmann::ordered_json family_to_json(const FamilyResult& result);
/// Inverse of family_to_json; throws std::invalid_argument on schema violations.
FamilyResult family_from_json(const nlohmann::json& j);

std::string render_family(const FamilyResult& result, OutputFormat format);

/// A labelled integer/rational sequence; values[i] has index first_index + i.
struct NumberTable {
  std::string kind;
  unsigned n_max = 0;
  unsigned first_index = 0;
  std::vector<Rational> values;
};

std::string render_numbers(const NumberTable& table, OutputFormat format);

/// {"id", "params", "lhs": [re, im], "rhs": [re, im], "residual", "pass"}
nlohmann::ordered_json report_to_json(const CheckReport& report);
std::string render_report(const CheckReport& report, OutputFormat format);

}  // namespace derivpoly
