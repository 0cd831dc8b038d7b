// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "mpoly/mpoly.hpp"

using namespace mpoly;

namespace {

const std::vector<Rational> kGridMus = {Rational(1), Rational(3),    Rational(5),    Rational(7),
                                        Rational(2), Rational(5, 2), Rational(-1, 2)};
constexpr long kJmax = 8, kEllmax = 3;

// Accumulates the first few problems of a criterion for the detail line.
struct Tally {
  long checks = 0, failures = 0;
  std::string first;
  std::string note;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  bool ok() const { return failures == 0 && checks > 0; }
};

std::string at(long j, long ell, const Rational& mu) {
  return "(j=" + std::to_string(j) + ", l=" + std::to_string(ell) + ", mu=" + mu.str() + ")";
}

Tally construction() {
  Tally t;
  long skipped = 0;
  for (const auto& mu : kGridMus)
    for (long ell = 0; ell <= kEllmax; ++ell) {
      EllRecurrenceBuilder builder;
      for (long j = 0; j <= kJmax + 2; ++j) {
        const Polynomial m = m_polynomial(j, ell, mu);
        t.expect(m_from_series(j, mu, ell) == m, "series " + at(j, ell, mu));
        if (j > kJmax) continue;
        try {
          t.expect(builder.get(j, ell, mu) == m, "l-recurrence " + at(j, ell, mu));
        } catch (const DegenerateLeadingFactor&) {
          ++skipped;
        }
      }
    }
  t.note = std::to_string(skipped) + " l-recurrence points undefined (2j+mu-1 = 0 during induction)";
  return t;
}

Tally special_values() {
  Tally t;
  for (const auto& mu : kGridMus)
    for (long ell = 0; ell <= kEllmax; ++ell)
      for (long j = 0; j <= kJmax; ++j) {
        const MPolyKey key{j, ell, mu};
        const Polynomial m = m_polynomial(key);
        t.expect(m.degree() == j + ell, "degree " + at(j, ell, mu));
        t.expect(m.leading() == Rational(j % 2 ? -1 : 1) / factorial(j), "top term " + at(j, ell, mu));
        if (mu.is_integer() && mu.to_long() % 2 == 1) {
          t.expect(constant_term(key) == m.coeff(0), "constant term " + at(j, ell, mu));
        } else if (mu == Rational(2) || mu == Rational(5, 2)) {
          const double want = m.coeff(0).to_double(), got = constant_term_float(key);
          const double err = want == 0.0 ? std::fabs(got) : std::fabs(got / want - 1.0);
          t.expect(err <= 1e-10, "float constant term " + at(j, ell, mu));
        }
      }
  return t;
}

Tally eigen() {
  Tally t;
  for (const auto& mu : kGridMus)
    for (long ell = 0; ell <= kEllmax; ++ell)
      for (long j = 0; j <= kJmax; ++j) t.expect(eigen_residual({j, ell, mu}).is_zero(), at(j, ell, mu));
  return t;
}

Tally orthogonality() {
  Tally t;
  for (long m : {3, 5, 7}) {
    const Rational mu(m);
    for (long ell = 0; 2 * ell + 1 <= m && ell <= kEllmax; ++ell) {
      const GramMatrix g = gram_matrix(kJmax, mu, ell);
      for (long j = 0; j <= kJmax; ++j)
        for (long k = 0; k <= kJmax; ++k) {
          if (j == k)
            t.expect(g[j][j].value == norm_squared_formula(j, mu, ell).value, "norm " + at(j, ell, mu));
          else
            t.expect(g[j][k].value.is_zero(), "off-diagonal k=" + std::to_string(k) + " " + at(j, ell, mu));
        }
    }
  }
  const Polynomial m0 = m_polynomial(0, 1, Rational(3)), m1 = m_polynomial(1, 1, Rational(3));
  t.expect(inner_product(m0, m0, Rational(3), 1).value == Rational(18), "<M_0,M_0> = 18");
  t.expect(inner_product(m1, m1, Rational(3), 1).value == Rational(48), "<M_1,M_1> = 48");
  return t;
}

Tally recurrences() {
  Tally t;
  for (const auto& mu : kGridMus)
    for (long ell = 0; ell <= kEllmax; ++ell)
      for (long j = 0; j <= kJmax; ++j) {
        const MPolyKey key{j, ell, mu};
        for (auto kind : {Recurrence::three_term, Recurrence::five_term, Recurrence::mu_shift, Recurrence::mixed})
          t.expect(verify_recurrence(kind, key).is_zero(), recurrence_id(kind) + " " + at(j, ell, mu));
        if (ell >= 1)
          t.expect(verify_recurrence(Recurrence::ell_shift, key).is_zero(), "recurrence-4 " + at(j, ell, mu));
      }
  // The literal form is a reported diagnostic with a nonzero residual.
  SuiteOptions opts;
  opts.grid = {kJmax, kEllmax, kGridMus};
  long literal = 0;
  for (const auto& e : run_suite({"recurrences"}, opts).entries) {
    if (e.id != "recurrence-4-literal") continue;
    ++literal;
    t.expect(e.status == Status::reported, "literal form not reported " + at(*e.j, *e.ell, *e.mu));
    if (e.j == 0 && e.ell == 1 && e.mu == Rational(3)) t.expect(e.residual == "-1/2*x^2", "literal residual at (0,1,3)");
  }
  t.expect(literal == static_cast<long>(kGridMus.size()) * kEllmax * (kJmax + 1), "literal entry count");
  return t;
}

Tally laguerre_suite() {
  Tally t;
  const auto rep = laguerre_identity_suite(10, {Rational(0), Rational(1), Rational(3), Rational(1, 2)});
  for (const auto& e : rep.entries) t.expect(e.status == Status::pass, e.id + " n=" + std::to_string(*e.j));
  for (long m : {3, 5, 2}) t.expect(three_term_impossibility(Rational(m)), "three-term at mu=" + std::to_string(m));
  t.expect(!three_term_impossibility(Rational(3), 0), "l=0 control");
  return t;
}

Tally operators() {
  Tally t;
  for (const auto& mu : kGridMus) {
    t.expect(square_identity_check(mu), "square identity mu=" + mu.str());
    for (const auto& nu : kGridMus) t.expect(d_symmetry_check(mu, nu), "D symmetry " + mu.str() + "," + nu.str());
    for (long ell = 0; ell <= kEllmax; ++ell) {
      t.expect(conjugation_identity_check(mu, ell), "conjugation identity " + at(0, ell, mu));
      t.expect(involution_check(mu, ell), "involution " + at(0, ell, mu));
      const Rational nu(2 * ell + 1);
      std::vector<Rational> want = {Rational(0), -mu, nu, nu - mu};
      std::sort(want.begin(), want.end());
      t.expect(indicial_roots(mu, ell) == want, "indicial roots " + at(0, ell, mu));
    }
  }
  return t;
}

Tally integral_representation() {
  Tally t;
  for (long m : {1, 3, 5})
    for (long ell = 0; ell <= 2; ++ell)
      for (long j = 0; j <= 4; ++j) {
        const auto p = integral_representation_exact(j, ell, Rational(m));
        t.expect(p.lhs == p.rhs, "exact " + at(j, ell, Rational(m)));
      }
  t.expect(integral_representation_exact(0, 0, Rational(1)).lhs == Polynomial{Rational(2)}, "LHS = 2 at (0,0,1)");
  t.expect(integral_representation_exact(0, 1, Rational(1)).lhs == Polynomial({Rational(4), Rational(4)}),
           "LHS = 4x+4 at (0,1,1)");
  double worst = 0.0;
  const QuadratureConfig cfg;
  for (const auto& mu : {Rational(1, 2), Rational(2), Rational(7, 2)})
    for (long ell = 0; ell <= 2; ++ell)
      for (long j = 0; j <= 4; ++j)
        for (double x : {0.5, 1.0, 2.0}) {
          try {
            const double err = integral_representation_numeric(j, ell, mu, x, cfg).rel_err();
            worst = std::max(worst, err);
            t.expect(err <= 1e-6, "numeric " + at(j, ell, mu) + " x=" + std::to_string(x));
          } catch (const ConvergenceFailure& e) {
            t.expect(false, e.what());
          }
        }
  t.note = "worst numeric relative error " + format_float(worst);
  return t;
}

Tally hankel() {
  Tally t;
  double worst = 0.0;
  const QuadratureConfig cfg;
  for (long m : {1, 2, 3})
    for (long j = 0; j <= 4; ++j)
      for (double x : {0.5, 1.0, 2.0}) {
        const Rational mu(m);
        try {
          const auto r = hankel_reproducing_check(j, mu, x, cfg);
          worst = std::max(worst, r.rel_err());
          t.expect(r.rel_err() <= 1e-6, at(j, 0, mu) + " x=" + std::to_string(x));
          const double untransformed = laguerre(j, mu).eval(x * x);
          if (std::fabs(untransformed) > 1e-12)
            t.expect((r.lhs * untransformed > 0) == (j % 2 == 0), "sign " + at(j, 0, mu) + " x=" + std::to_string(x));
        } catch (const ConvergenceFailure& e) {
          t.expect(false, e.what());
        }
      }
  t.note = "worst relative error " + format_float(worst);
  return t;
}

Tally cli_contract() {
  Tally t;
  auto run = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return std::make_pair(code, out.str());
  };
  const std::vector<std::vector<std::string>> stable = {
      {"coeffs", "--j", "3", "--ell", "2", "--mu", "5/2"},
      {"coeffs", "--j", "0", "--ell", "1", "--mu", "3", "--format", "csv"},
      {"gram", "--jmax", "3", "--ell", "1", "--mu", "5", "--format", "csv"},
      {"verify", "--jmax", "2", "--ellmax", "1", "--mus", "3,5/2"}};
  for (const auto& args : stable) {
    const auto a = run(args), b = run(args);
    t.expect(a == b && !a.second.empty(), "byte stability: " + args[0]);
  }
  t.expect(run({"coeffs", "--j", "0", "--ell", "1", "--mu", "3", "--format", "csv"}).second == "2,1\n1,1\n", "csv");
  t.expect(run({"eval", "--j", "1", "--ell", "1", "--mu", "3", "--x", "0"}).second == "4\n", "eval");
  t.expect(run({"verify", "--suites", "eigen", "--jmax", "2", "--ellmax", "1", "--mus", "3"}).first == 0, "exit 0");
  t.expect(run({"verify", "--suites", "hankel", "--jmax", "1", "--mus", "1", "--quad-panels", "1", "--quad-order",
                "2"}).first == 1,
           "exit 1 on a failing entry");
  t.expect(run({"coeffs", "--j", "0", "--ell", "1", "--mu", "-2"}).first == 2, "exit 2 on a pole");
  t.expect(run({"verify", "--suites", "nope"}).first == 2, "exit 2 on an unknown suite");

  const auto report_text = run({"verify", "--jmax", "2", "--ellmax", "1", "--mus", "3,5/2"}).second;
  const auto report = report_from_json(nlohmann::ordered_json::parse(report_text));
  t.expect(to_json(report).dump(2) + "\n" == report_text, "report json round trip");
  const auto coeff_text = run({"coeffs", "--j", "5", "--ell", "3", "--mu", "-1/2"}).second;
  const auto file = coefficients_from_json(nlohmann::ordered_json::parse(coeff_text));
  t.expect(file.poly == m_polynomial(5, 3, Rational(-1, 2)), "coefficient file decodes to M_5");
  t.expect(coefficients_to_json(file.key, file.poly).dump() + "\n" == coeff_text, "coefficient json round trip");
  return t;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Tally()>>> criteria = {
      {"construction consistency (explicit = series = l-recurrence)", construction},
      {"degree, top term and constant term", special_values},
      {"fourth-order eigen-equation", eigen},
      {"orthogonality and norms", orthogonality},
      {"recurrence relations", recurrences},
      {"Laguerre identities and no three-term recurrence", laguerre_suite},
      {"operator identities", operators},
      {"integral representation", integral_representation},
      {"Hankel reproducing property at l = 0", hankel},
      {"CLI contract", cli_contract},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = criteria[i].second();
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (t.ok() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ["
              << t.checks - t.failures << "/" << t.checks << " checks, " << ms << " ms]";
    if (!t.ok()) std::cout << " first failure: " << t.first;
    if (!t.note.empty()) std::cout << "; " << t.note;
    std::cout << "\n";
    if (!t.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
