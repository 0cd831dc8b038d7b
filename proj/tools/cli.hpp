#ifndef MPOLY_TOOLS_CLI_HPP
#define MPOLY_TOOLS_CLI_HPP

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mpoly/mpoly.hpp"

namespace mpoly::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline Rational parse_mu(const std::string& s) {
  const Rational mu = Rational::parse(s);
  MPolyKey{0, 0, mu}.validate();
  return mu;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (s.back() == sep) out.emplace_back();
  return out;
}

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Runs one invocation; argv[0] is the program name. Everything meant for
/// stdout goes to `out`, diagnostics to `err`. Returns the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and verification of the M_j^{mu,l} polynomial family", "mpoly"};
  app.require_subcommand(1);

  long j = 0, ell = 0, jmax = 8, ellmax = 3;
  std::string mu_text = "1", x_text, format = "json";
  std::string suites_text, mus_text = "1,3,5,7,2,5/2,-1/2";
  int quad_panels = QuadratureConfig{}.panel_count, quad_order = QuadratureConfig{}.nodes_per_panel;
  bool as_float = false, timing = false;

  auto key_options = [&](CLI::App* sub) {
    sub->add_option("--j", j, "index j")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--ell", ell, "index l")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--mu", mu_text, "parameter mu as p or p/q")->capture_default_str();
  };

  auto* coeffs = app.add_subcommand("coeffs", "coefficients of M_j, ascending degree");
  key_options(coeffs);
  coeffs->add_option("--format", format, "json, csv or latex")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv", "latex"}));

  auto* eval = app.add_subcommand("eval", "evaluate M_j at a point");
  key_options(eval);
  eval->add_option("--x", x_text, "point; rational unless --float")->required();
  eval->add_flag("--float", as_float, "floating-point evaluation, 17 significant digits");

  auto* gram = app.add_subcommand("gram", "Gram matrix <M_j, M_k> in units Gamma(mu-2l+1)");
  gram->add_option("--jmax", jmax, "largest index")->capture_default_str()->check(CLI::NonNegativeNumber);
  gram->add_option("--ell", ell, "index l")->required()->check(CLI::NonNegativeNumber);
  gram->add_option("--mu", mu_text, "parameter mu")->capture_default_str();
  gram->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* verify = app.add_subcommand("verify", "run identity checks and print a JSON report");
  verify->add_option("--suites", suites_text, "comma-separated suite names (default: all)");
  verify->add_option("--jmax", jmax, "largest j")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_option("--ellmax", ellmax, "largest l")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_option("--mus", mus_text, "comma-separated mu values")->capture_default_str();
  verify->add_option("--quad-panels", quad_panels, "quadrature panels")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--quad-order", quad_order, "Gauss-Legendre nodes per panel")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_flag("--timing", timing, "record per-entry wall time (output no longer reproducible)");

  auto* tex = app.add_subcommand("latex", "M_j as a LaTeX expression");
  key_options(tex);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*verify) {
      SuiteOptions opts;
      opts.grid.jmax = jmax;
      opts.grid.ellmax = ellmax;
      opts.grid.mus.clear();
      for (const auto& m : split(mus_text, ',')) opts.grid.mus.push_back(parse_mu(m));
      opts.quad.panel_count = quad_panels;
      opts.quad.nodes_per_panel = quad_order;
      opts.timing = timing;
      std::vector<std::string> suites = suites_text.empty() ? suite_names() : split(suites_text, ',');
      for (const auto& s : suites)
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
          throw UsageError("unknown suite '" + s + "'");
      const VerificationReport report = run_suite(suites, opts);
      out << to_json(report).dump(2) << "\n";
      return report.any_failed() ? kExitFailed : kExitOk;
    }

    const Rational mu = parse_mu(mu_text);
    if (*gram) {
      const GramMatrix g = gram_matrix(jmax, mu, ell);
      if (format == "json") out << gram_to_json(g, mu, ell).dump() << "\n";
      else out << gram_to_csv(g);
      return kExitOk;
    }

    const MPolyKey key{j, ell, mu};
    const Polynomial p = m_polynomial(key);
    if (*coeffs) {
      if (format == "json") out << coefficients_to_json(key, p).dump() << "\n";
      else if (format == "csv") out << coefficients_to_csv(p);
      else out << latex(p) << "\n";
    } else if (*eval) {
      if (as_float) {
        std::size_t used = 0;
        double x = 0.0;
        try {
          x = std::stod(x_text, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used == 0 || used != x_text.size()) throw UsageError("--x: not a decimal number: '" + x_text + "'");
        out << format_double(p.eval(x)) << "\n";
      } else {
        out << p.eval(Rational::parse(x_text)).str() << "\n";
      }
    } else if (*tex) {
      out << latex(p) << "\n";
    }
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailed;
  }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv = {"mpoly"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mpoly::cli

#endif  // MPOLY_TOOLS_CLI_HPP
