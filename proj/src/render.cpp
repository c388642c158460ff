#include "derivpoly/render.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace derivpoly {

namespace {

std::string coefficient_text(const Rational& magnitude, bool latex, bool has_variable) {
  if (has_variable && magnitude == Rational(1)) return "";
  if (magnitude.is_integer()) return magnitude.to_string();
  if (latex) return "\\frac{" + magnitude.num().get_str() + "}{" + magnitude.den().get_str() + "}";
  return "(" + magnitude.to_string() + ")";
}

std::string variable_text(std::size_t degree, bool latex) {
  if (degree == 0) return "";
  if (degree == 1) return "z";
  return latex ? "z^{" + std::to_string(degree) + "}" : "z^" + std::to_string(degree);
}

std::string render_poly(const std::vector<Rational>& coeffs, bool latex) {
  std::string out;
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    const Rational& c = coeffs[j];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += coefficient_text(negative ? -c : c, latex, j > 0);
    out += variable_text(j, latex);
  }
  return out.empty() ? "0" : out;
}

std::string latex_number(const Rational& r) {
  if (r.is_integer()) return r.to_string();
  const Rational mag = r.sign() < 0 ? -r : r;
  return std::string(r.sign() < 0 ? "-" : "") + "\\frac{" + mag.num().get_str() + "}{" + mag.den().get_str() + "}";
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string params_text(const CheckReport& report) {
  std::string out;
  for (const auto& [name, value] : report.params) {
    if (!out.empty()) out += ' ';
    std::ostringstream os;
    os << name << '=' << value;
    out += os.str();
  }
  return out;
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "plain") return OutputFormat::Plain;
  if (name == "latex") return OutputFormat::Latex;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

std::string render_poly_plain(const std::vector<Rational>& coeffs) { return render_poly(coeffs, false); }

std::string render_poly_latex(const std::vector<Rational>& coeffs) { return render_poly(coeffs, true); }

nlohmann::ordered_json family_to_json(const FamilyResult& result) {
  nlohmann::ordered_json j;
  j["family"] = std::string(family_name(result.family));
  j["m"] = result.m;
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& c : result.poly.real_coeffs()) coeffs.push_back(c.to_string());
  j["coefficients"] = std::move(coeffs);
  return j;
}

FamilyResult family_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family") || !j.contains("m") || !j.contains("coefficients")) {
    throw std::invalid_argument("family JSON: expected keys family, m, coefficients");
  }
  const auto family = parse_family(j.at("family").get<std::string>());
  if (!family) throw std::invalid_argument("family JSON: unknown family");
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coefficients")) coeffs.push_back(Rational::parse(c.get<std::string>()));
  return {*family, j.at("m").get<unsigned>(), Poly(coeffs)};
}

std::string render_family(const FamilyResult& result, OutputFormat format) {
  const auto coeffs = result.poly.real_coeffs();
  switch (format) {
    case OutputFormat::Plain: return render_poly_plain(coeffs);
    case OutputFormat::Latex: return render_poly_latex(coeffs);
    case OutputFormat::Json: return family_to_json(result).dump();
    case OutputFormat::Csv: {
      std::string out = "degree,coefficient\n";
      for (std::size_t j = 0; j < coeffs.size(); ++j) out += std::to_string(j) + "," + coeffs[j].to_string() + "\n";
      if (!out.empty()) out.pop_back();
      return out;
    }
  }
  return {};
}

std::string render_numbers(const NumberTable& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::Plain:
    case OutputFormat::Latex: {
      std::string out;
      for (const auto& v : table.values) {
        if (!out.empty()) out += ", ";
        out += format == OutputFormat::Latex ? latex_number(v) : v.to_string();
      }
      return out;
    }
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["kind"] = table.kind;
      j["n_max"] = table.n_max;
      j["first_index"] = table.first_index;
      auto values = nlohmann::ordered_json::array();
      for (const auto& v : table.values) values.push_back(v.to_string());
      j["values"] = std::move(values);
      return j.dump();
    }
    case OutputFormat::Csv: {
      std::string out = "index,value";
      for (std::size_t i = 0; i < table.values.size(); ++i) {
        out += "\n" + std::to_string(table.first_index + i) + "," + table.values[i].to_string();
      }
      return out;
    }
  }
  return {};
}

nlohmann::ordered_json report_to_json(const CheckReport& report) {
  nlohmann::ordered_json j;
  j["id"] = report.identity_id;
  auto params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.params) params[name] = value;
  j["params"] = std::move(params);
  j["lhs"] = {report.lhs.real(), report.lhs.imag()};
  j["rhs"] = {report.rhs.real(), report.rhs.imag()};
  j["residual"] = report.residual;
  j["pass"] = report.pass;
  return j;
}

std::string render_report(const CheckReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return report_to_json(report).dump();
    case OutputFormat::Csv: {
      std::ostringstream os;
      os.precision(17);
      os << report.identity_id << ',' << '"' << params_text(report) << '"' << ',' << report.lhs.real() << ','
         << report.lhs.imag() << ',' << report.rhs.real() << ',' << report.rhs.imag() << ',' << report.residual << ','
         << report.tol << ',' << (report.pass ? "pass" : "fail");
      return os.str();
    }
    case OutputFormat::Latex:
      return "\\texttt{" + report.identity_id + "} & " + params_text(report) + " & " + format_double(report.residual) +
             " & " + (report.pass ? "pass" : "fail") + " \\\\";
    case OutputFormat::Plain: break;
  }
  std::string line = report.pass ? "PASS " : "FAIL ";
  line += report.identity_id;
  if (!report.params.empty()) line += " " + params_text(report);
  line += " residual=" + format_double(report.residual) + " tol=" + format_double(report.tol);
  return line;
}

}  // namespace derivpoly
