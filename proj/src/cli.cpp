#include "derivpoly/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "derivpoly/analytic.hpp"
#include "derivpoly/combinat.hpp"
#include "derivpoly/errors.hpp"
#include "derivpoly/polyfamilies.hpp"
#include "derivpoly/render.hpp"
#include "derivpoly/verify.hpp"

namespace derivpoly {

namespace {

struct GlobalOptions {
  std::string format = "plain";
  std::optional<double> tol;
  bool quiet = false;
};

int cmd_poly(const GlobalOptions& g, const std::string& family, unsigned m, std::ostream& out) {
  const auto parsed = parse_family(family);
  if (!parsed) return kExitUsage;
  out << render_family(family_poly(*parsed, m), *parse_format(g.format)) << '\n';
  return kExitOk;
}

int cmd_numbers(const GlobalOptions& g, const std::string& kind, unsigned n_max, std::ostream& out) {
  NumberTable table{kind, n_max, 0, {}};
  if (kind == "bernoulli") {
    for (unsigned n = 0; n <= n_max; ++n) table.values.push_back(bernoulli(n));
  } else if (kind == "euler") {
    for (unsigned n = 0; n <= n_max; ++n) table.values.push_back(euler_number(n));
  } else if (kind == "tangent") {
    table.first_index = 1;
    for (unsigned k = 1; k <= n_max; ++k) table.values.push_back(tangent_number(k));
  } else if (kind == "stirling-row") {
    for (unsigned k = 0; k <= n_max; ++k) table.values.emplace_back(stirling2(n_max, k));
  } else {
    return kExitUsage;
  }
  out << render_numbers(table, *parse_format(g.format)) << '\n';
  return kExitOk;
}

int cmd_verify(const GlobalOptions& g, const std::string& suite, VerifyOptions opts, std::ostream& out) {
  opts.tol = g.tol;
  const auto reports = run_suite(suite, opts);
  if (!reports) return kExitUsage;
  const OutputFormat format = *parse_format(g.format);
  std::size_t failed = 0;
  if (format == OutputFormat::Csv) out << "id,params,lhs_re,lhs_im,rhs_re,rhs_im,residual,tol,result\n";
  for (const auto& report : *reports) {
    if (!report.pass) ++failed;
    if (g.quiet && report.pass) continue;
    out << render_report(report, format) << '\n';
  }
  if (format == OutputFormat::Plain) {
    out << reports->size() << " checks, " << failed << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_eisenstein(const GlobalOptions& g, unsigned r, std::optional<double> z, std::size_t terms, std::ostream& out) {
  const EisensteinExpansion expansion = eisenstein_expansion(r);
  const OutputFormat format = *parse_format(g.format);
  nlohmann::ordered_json j;
  j["r"] = r;
  j["expansion"] = expansion.to_string();
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& [power, c] : expansion.terms) coeffs.push_back({power, c.to_string()});
  j["terms"] = std::move(coeffs);

  if (!z) {
    if (format == OutputFormat::Json) {
      out << j.dump() << '\n';
    } else if (format == OutputFormat::Csv) {
      out << "e1_power,pi_power,coefficient\n";
      for (const auto& [power, c] : expansion.terms) out << power << ',' << (r - power) << ',' << c.to_string() << '\n';
    } else {
      out << expansion.to_string() << '\n';
    }
    return kExitOk;
  }

  const ComplexF e1 = std::numbers::pi / std::tan(std::numbers::pi * *z);
  const ComplexF expanded = expansion.evaluate(e1);
  const ComplexF direct = eisenstein_direct(r, *z, terms);
  const double difference = std::abs(direct - expanded);
  const double bound = eisenstein_tail_bound(r, *z, terms);
  const double tol = g.tol.value_or(bound + 1e-10 * std::max(1.0, std::abs(expanded)));
  const bool pass = difference <= tol;

  if (format == OutputFormat::Json) {
    j["z"] = *z;
    j["direct"] = {direct.real(), direct.imag()};
    j["expansion_value"] = {expanded.real(), expanded.imag()};
    j["difference"] = difference;
    j["tail_bound"] = bound;
    j["pass"] = pass;
    out << j.dump() << '\n';
  } else if (format == OutputFormat::Csv) {
    out << "r,z,terms,direct,expansion,difference,tail_bound,pass\n";
    out.precision(17);
    out << r << ',' << *z << ',' << terms << ',' << direct.real() << ',' << expanded.real() << ',' << difference << ','
        << bound << ',' << (pass ? "pass" : "fail") << '\n';
  } else {
    std::ostringstream os;
    os.precision(15);
    os << expansion.to_string() << '\n'
       << "direct    = " << direct.real() << '\n'
       << "expansion = " << expanded.real() << '\n';
    os.precision(3);
    os << std::scientific << "difference = " << difference << " (tail bound " << bound << ")\n";
    out << os.str();
  }
  return pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Derivative polynomials of tanh, tan, sech, sec and friends: tables, numbers and identity checks",
               "derivpoly"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions global;
  double tol_value = 0.0;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"plain", "latex", "json", "csv"}))
      ->capture_default_str();
  auto* tol_opt = app.add_option("--tol", tol_value, "Override the numeric tolerance")->check(CLI::NonNegativeNumber);
  app.add_flag("--quiet", global.quiet, "Only print failing checks");

  const std::vector<std::string> families = {"tanh", "coth", "tan", "cot", "sech", "csch", "sec"};
  std::string family;
  unsigned poly_m = 0;
  auto* poly = app.add_subcommand("poly", "Print a derivative polynomial");
  poly->add_option("family", family, "tanh|coth|tan|cot|sech|csch|sec")->required()->check(CLI::IsMember(families));
  poly->add_option("m", poly_m, "Derivative order")->required();

  std::string kind;
  unsigned n_max = 0;
  auto* numbers = app.add_subcommand("numbers", "Print Bernoulli, Euler, tangent numbers or a Stirling row");
  numbers->add_option("kind", kind, "bernoulli|euler|tangent|stirling-row")
      ->required()
      ->check(CLI::IsMember({"bernoulli", "euler", "tangent", "stirling-row"}));
  numbers->add_option("n_max", n_max, "Last index")->required();

  std::string suite;
  VerifyOptions vopts;
  unsigned n_value = 0;
  unsigned r_value = 0;
  double z_value = 0.0;
  double a_value = 0.0;
  auto* verify = app.add_subcommand("verify", "Run identity checks; exit 1 if any fails");
  verify->add_option("suite", suite, "polys|reflection|eisenstein|integrals|all")
      ->required()
      ->check(CLI::IsMember({"polys", "reflection", "eisenstein", "integrals", "all"}));
  verify->add_option("--max-m", vopts.max_m, "Largest order for the polynomial suite")->capture_default_str();
  auto* n_opt = verify->add_option("--n", n_value, "Restrict to one order n");
  auto* r_opt = verify->add_option("--r", r_value, "Restrict to one Eisenstein order r")->check(CLI::PositiveNumber);
  auto* z_opt = verify->add_option("--z", z_value, "Restrict to one point z");
  auto* a_opt = verify->add_option("--a", a_value, "Restrict to one parameter a");
  verify->add_option("--terms", vopts.terms, "Eisenstein partial-sum length")->check(CLI::PositiveNumber);

  unsigned eis_r = 1;
  double eis_z = 0.0;
  std::size_t eis_terms = 100000;
  auto* eisenstein = app.add_subcommand("eisenstein", "Print e_r as a polynomial in e_1, optionally check it at z");
  eisenstein->add_option("--r", eis_r, "Order r >= 1")->required()->check(CLI::PositiveNumber);
  auto* eis_z_opt = eisenstein->add_option("--z", eis_z, "Evaluation point (not an integer)");
  eisenstein->add_option("--terms", eis_terms, "Partial-sum length")->check(CLI::PositiveNumber)->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (*tol_opt) global.tol = tol_value;

  try {
    if (*poly) return cmd_poly(global, family, poly_m, out);
    if (*numbers) return cmd_numbers(global, kind, n_max, out);
    if (*verify) {
      if (*n_opt) vopts.n = n_value;
      if (*r_opt) vopts.r = r_value;
      if (*z_opt) vopts.z = z_value;
      if (*a_opt) vopts.a = a_value;
      return cmd_verify(global, suite, vopts, out);
    }
    if (*eisenstein) {
      return cmd_eisenstein(global, eis_r, *eis_z_opt ? std::optional<double>(eis_z) : std::nullopt, eis_terms, out);
    }
  } catch (const std::domain_error& e) {
    // Pole and domain errors come from user-chosen points.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace derivpoly
