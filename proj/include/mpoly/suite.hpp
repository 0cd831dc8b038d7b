#ifndef MPOLY_SUITE_HPP
#define MPOLY_SUITE_HPP

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpoly/diffop.hpp"
#include "mpoly/errors.hpp"
#include "mpoly/family.hpp"
#include "mpoly/genfun.hpp"
#include "mpoly/numint.hpp"
#include "mpoly/ortho.hpp"
#include "mpoly/report.hpp"

namespace mpoly {

struct SuiteGrid {
  long jmax = 8;
  long ellmax = 3;
  std::vector<Rational> mus = {Rational(1), Rational(3),    Rational(5),    Rational(7),
                               Rational(2), Rational(5, 2), Rational(-1, 2)};

  bool empty() const { return mus.empty() || jmax < 0 || ellmax < 0; }
};

struct SuiteOptions {
  SuiteGrid grid;
  QuadratureConfig quad;
  /// Record wall-clock time per entry. Off by default so that reports are
  /// byte-identical across runs.
  bool timing = false;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"recurrences", "eigen",    "ortho",   "genfun",
                                                 "operators",   "integral", "hankel",  "laguerre"};
  return names;
}

inline std::string format_float(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

namespace detail {

// Collects entries for one suite. Every check runs inside `check`, so an
// exception turns into an entry instead of escaping.
class SuiteRecorder {
 public:
  SuiteRecorder(VerificationReport& out, bool timing) : out_(out), timing_(timing) {}

  struct Outcome {
    bool ok = true;
    std::string residual = "0";
  };

  // `asserted` false turns pass/fail into "reported".
  void check(const std::string& id, std::optional<long> j, std::optional<long> ell, std::optional<Rational> mu,
             bool asserted, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    ReportEntry e{id, j, ell, std::move(mu), Status::pass, o.residual, 0};
    e.status = !asserted ? Status::reported : (o.ok ? Status::pass : Status::fail);
    if (timing_)
      e.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    out_.add(std::move(e));
  }

 private:
  VerificationReport& out_;
  bool timing_;
};

inline SuiteRecorder::Outcome exact(const Polynomial& residual) { return {residual.is_zero(), residual.str()}; }
inline SuiteRecorder::Outcome exact(const LaurentPolynomial& residual) {
  return {residual.terms().empty(), residual.str()};
}
inline SuiteRecorder::Outcome boolean(bool ok, const std::string& detail = "") {
  return {ok, ok ? "0" : (detail.empty() ? "mismatch" : detail)};
}
inline SuiteRecorder::Outcome relative(const QuadratureResult& r, double tol) {
  const double err = r.rel_err();
  return {err <= tol, format_float(err)};
}

inline bool odd_positive(const Rational& mu) { return mu.is_integer() && mu.sign() > 0 && mu.to_long() % 2 == 1; }

inline const std::vector<std::pair<std::string, double>>& sample_points() {
  static const std::vector<std::pair<std::string, double>> xs = {{"1/2", 0.5}, {"1", 1.0}, {"2", 2.0}};
  return xs;
}

inline void run_recurrences(SuiteRecorder& rec, const SuiteGrid& g) {
  for (const auto& mu : g.mus)
    for (long ell = 0; ell <= g.ellmax; ++ell) {
      EllRecurrenceBuilder builder;
      for (long j = 0; j <= g.jmax; ++j) {
        const MPolyKey key{j, ell, mu};
        for (auto kind : {Recurrence::three_term, Recurrence::five_term, Recurrence::mu_shift, Recurrence::mixed})
          rec.check(recurrence_id(kind), j, ell, mu, true, [&] { return exact(verify_recurrence(kind, key)); });
        if (ell >= 1) {
          rec.check(recurrence_id(Recurrence::ell_shift), j, ell, mu, true,
                    [&] { return exact(verify_recurrence(Recurrence::ell_shift, key)); });
          rec.check(recurrence_id(Recurrence::ell_shift_literal), j, ell, mu, false,
                    [&] { return exact(verify_recurrence(Recurrence::ell_shift_literal, key)); });
        }
        // Where 2j+mu-1 vanishes at some induction step the build is undefined;
        // such points are reported instead of asserted.
        bool degenerate = false;
        Polynomial built;
        try {
          built = builder.get(j, ell, mu);
        } catch (const DegenerateLeadingFactor&) {
          degenerate = true;
        }
        rec.check("ell-recurrence-build", j, ell, mu, !degenerate, [&]() -> SuiteRecorder::Outcome {
          if (degenerate) return {false, "degenerate: 2j+mu-1 = 0 during induction"};
          return exact(built - m_polynomial(key));
        });
      }
    }
}

inline void run_eigen(SuiteRecorder& rec, const SuiteGrid& g) {
  for (const auto& mu : g.mus)
    for (long ell = 0; ell <= g.ellmax; ++ell) {
      const DiffOperator reversed = make_x2P_reversed(mu, ell);
      for (long j = 0; j <= g.jmax; ++j) {
        const MPolyKey key{j, ell, mu};
        rec.check("eigen", j, ell, mu, true, [&] { return exact(eigen_residual(key)); });
        rec.check("eigen-reversed-order", j, ell, mu, false, [&] {
          const Polynomial m = m_polynomial(key);
          const Rational lambda = Rational(j) * (Rational(j) + mu + Rational(1));
          return exact(reversed.apply(m) - LaurentPolynomial(m.shift(2) * lambda));
        });
      }
    }
}

inline void run_ortho(SuiteRecorder& rec, const SuiteGrid& g) {
  for (const auto& mu : g.mus)
    for (long ell = 0; ell <= g.ellmax; ++ell) {
      const bool asserted = odd_positive(mu) && mu >= Rational(2 * ell + 1);
      std::optional<GramMatrix> gram;
      std::string gram_error;
      try {
        gram = gram_matrix(g.jmax, mu, ell);
      } catch (const std::exception& e) {
        gram_error = std::string("error: ") + e.what();
      }
      for (long j = 0; j <= g.jmax; ++j) {
        rec.check("ortho-norm", j, ell, mu, asserted, [&]() -> SuiteRecorder::Outcome {
          if (!gram) return {false, gram_error};
          const Rational diff = (*gram)[j][j].value - norm_squared_formula(j, mu, ell).value;
          return {diff.is_zero(), diff.str()};
        });
        rec.check("ortho-orthogonal", j, ell, mu, asserted, [&]() -> SuiteRecorder::Outcome {
          if (!gram) return {false, gram_error};
          for (long k = 0; k < j; ++k)
            if (!(*gram)[j][k].value.is_zero())
              return {false, "<M_" + std::to_string(j) + ",M_" + std::to_string(k) + "> = " + (*gram)[j][k].value.str()};
          return {true, "0"};
        });
      }
    }
}

inline void run_genfun(SuiteRecorder& rec, const SuiteGrid& g) {
  const long jseries = g.jmax + 2;
  for (const auto& mu : g.mus) {
    for (long ell = 0; ell <= g.ellmax; ++ell) {
      std::optional<PowerSeries> ghat;
      std::string ghat_error;
      try {
        ghat = ghat_series(mu, ell, jseries + 2);
      } catch (const std::exception& e) {
        ghat_error = std::string("error: ") + e.what();
      }
      for (long j = 0; j <= jseries; ++j) {
        const MPolyKey key{j, ell, mu};
        rec.check("genfun-vs-explicit", j, ell, mu, true, [&] { return exact(m_from_series(j, mu, ell) - m_polynomial(key)); });
        rec.check("genfun-coefficient-degree", j, ell, mu, true, [&]() -> SuiteRecorder::Outcome {
          if (!ghat) return {false, ghat_error};
          const long d = (*ghat)[j].degree();
          return {d == j + ell, std::to_string(d - (j + ell))};
        });
        if (j > g.jmax) continue;
        rec.check("top-term", j, ell, mu, true, [&]() -> SuiteRecorder::Outcome {
          const Polynomial m = m_polynomial(key);
          const Rational expected = Rational(j % 2 == 0 ? 1 : -1) / factorial(j);
          if (m.degree() != j + ell) return {false, "degree " + std::to_string(m.degree())};
          const Rational diff = m.leading() - expected;
          return {diff.is_zero(), diff.str()};
        });
        if (mu.is_integer()) {
          rec.check("constant-term", j, ell, mu, true, [&]() -> SuiteRecorder::Outcome {
            const Rational diff = constant_term(key) - m_polynomial(key).coeff(0);
            return {diff.is_zero(), diff.str()};
          });
        } else {
          rec.check("constant-term-float", j, ell, mu, mu > Rational(-1), [&]() -> SuiteRecorder::Outcome {
            const double want = m_polynomial(key).coeff(0).to_double();
            const double got = constant_term_float(key);
            const double err = want == 0.0 ? std::fabs(got) : std::fabs(got - want) / std::fabs(want);
            return {err <= 1e-10, format_float(err)};
          });
        }
      }
      if (ell == 0) {
        // Laguerre layer against the classical generating function.
        rec.check("genfun-laguerre", std::nullopt, ell, mu, true, [&]() -> SuiteRecorder::Outcome {
          const PowerSeries classic = laguerre_generating_series(mu, jseries);
          for (long j = 0; j <= jseries; ++j) {
            const Polynomial diff = m_from_series(j, mu, 0) - classic[j];
            if (!diff.is_zero()) return {false, "t^" + std::to_string(j) + ": " + diff.str()};
          }
          return {true, "0"};
        });
      }
      rec.check("m0-closed-form", 0, ell, mu, true,
                [&] { return exact(m_polynomial(0, ell, mu) - m_zero_closed_form(ell)); });
    }
  }
}

inline void run_operators(SuiteRecorder& rec, const SuiteGrid& g) {
  for (const auto& mu : g.mus) {
    rec.check("square-identity", std::nullopt, std::nullopt, mu, true, [&] { return boolean(square_identity_check(mu)); });
    for (const auto& nu : g.mus)
      rec.check("d-symmetry[nu=" + nu.str() + "]", std::nullopt, std::nullopt, mu, true,
                [&] { return boolean(d_symmetry_check(mu, nu)); });
    for (long ell = 0; ell <= g.ellmax; ++ell) {
      rec.check("conjugation-identity", std::nullopt, ell, mu, true, [&] { return boolean(conjugation_identity_check(mu, ell)); });
      rec.check("involution", std::nullopt, ell, mu, true, [&] { return boolean(involution_check(mu, ell)); });
      rec.check("indicial-roots", std::nullopt, ell, mu, true, [&]() -> SuiteRecorder::Outcome {
        const Rational nu(2 * ell + 1);
        std::vector<Rational> expected = {Rational(0), -mu, nu, nu - mu};
        std::sort(expected.begin(), expected.end());
        const auto got = indicial_roots(mu, ell);
        std::string s;
        for (const auto& r : got) s += (s.empty() ? "" : ",") + r.str();
        return {got == expected, got == expected ? "0" : "roots " + s};
      });
      rec.check("composition-order", std::nullopt, ell, mu, false, [&] {
        const DiffOperator diff = make_x2P(mu, ell) - make_x2P_reversed(mu, ell);
        return SuiteRecorder::Outcome{diff.terms().empty(), diff.terms().empty() ? "0" : diff.str()};
      });
    }
  }
}

inline void run_integral(SuiteRecorder& rec, const SuiteGrid& g, const QuadratureConfig& cfg) {
  const long jn = std::min<long>(g.jmax, 4), ln = std::min<long>(g.ellmax, 2);
  for (const auto& mu : g.mus) {
    if (odd_positive(mu)) {
      for (long ell = 0; ell <= g.ellmax; ++ell)
        for (long j = 0; j <= g.jmax; ++j)
          rec.check("integral-exact", j, ell, mu, true, [&] {
            const auto pair = integral_representation_exact(j, ell, mu);
            return exact(pair.lhs - pair.rhs);
          });
      // The quadrature path must agree with the exact one.
      for (long ell = 0; ell <= ln; ++ell)
        for (long j = 0; j <= jn; ++j)
          rec.check("integral-exact-vs-numeric[x=1]", j, ell, mu, true, [&] {
            auto r = integral_representation_numeric(j, ell, mu, 1.0, cfg);
            r.rhs = integral_representation_exact(j, ell, mu).lhs.eval(1.0);
            return relative(r, 1e-9);
          });
      continue;
    }
    for (long ell = 0; ell <= ln; ++ell)
      for (long j = 0; j <= jn; ++j)
        for (const auto& [xs, x] : sample_points())
          rec.check("integral-numeric[x=" + xs + "]", j, ell, mu, mu > Rational(-1), [&] {
            const auto r = integral_representation_numeric(j, ell, mu, x, cfg);
            return relative(r, 1e-6);
          });
  }
}

inline void run_hankel(SuiteRecorder& rec, const SuiteGrid& g, const QuadratureConfig& cfg) {
  const long jn = std::min<long>(g.jmax, 4);
  for (const auto& mu : g.mus) {
    const bool in_range = mu > Rational(-1);
    for (long j = 0; j <= jn; ++j) {
      for (const auto& [xs, x] : sample_points())
        rec.check("hankel[x=" + xs + "]", j, 0, mu, in_range, [&] {
          const auto r = hankel_reproducing_check(j, mu, x, cfg);
          return relative(r, 1e-6);
        });
      // The transform flips sign exactly when j is odd.
      rec.check("hankel-sign[x=1]", j, 0, mu, in_range, [&]() -> SuiteRecorder::Outcome {
        const auto r = hankel_reproducing_check(j, mu, 1.0, cfg);
        const double untransformed = laguerre(j, mu).eval(1.0);
        const bool ok = (r.lhs * untransformed > 0) == (j % 2 == 0);
        return {ok, ok ? "0" : "sign " + format_float(r.lhs)};
      });
    }
  }
}

inline void run_laguerre(SuiteRecorder& rec, VerificationReport& out, const SuiteGrid& g) {
  const std::vector<Rational> alphas = {Rational(0), Rational(1), Rational(3), Rational(1, 2)};
  out.append(laguerre_identity_suite(g.jmax + 2, alphas));
  for (const auto& mu : g.mus) {
    rec.check("three-term-impossibility", std::nullopt, 1, mu, true,
              [&] { return boolean(three_term_impossibility(mu, 1), "solvable"); });
    rec.check("three-term-control", std::nullopt, 0, mu, true,
              [&] { return boolean(!three_term_impossibility(mu, 0), "no solution at l = 0"); });
  }
}

}  // namespace detail

/// Runs the named suites over the grid. Failures are entries, never
/// exceptions; entries come back sorted by (id, mu, ell, j).
inline VerificationReport run_suite(const std::vector<std::string>& suites, const SuiteOptions& opts = {}) {
  VerificationReport report;
  for (std::size_t i = 0; i < suites.size(); ++i) report.suite += (i ? "," : "") + suites[i];
  if (opts.grid.empty()) return report;

  detail::SuiteRecorder rec(report, opts.timing);
  const SuiteGrid& g = opts.grid;
  for (const auto& name : suites) {
    if (name == "recurrences") detail::run_recurrences(rec, g);
    else if (name == "eigen") detail::run_eigen(rec, g);
    else if (name == "ortho") detail::run_ortho(rec, g);
    else if (name == "genfun") detail::run_genfun(rec, g);
    else if (name == "operators") detail::run_operators(rec, g);
    else if (name == "integral") detail::run_integral(rec, g, opts.quad);
    else if (name == "hankel") detail::run_hankel(rec, g, opts.quad);
    else if (name == "laguerre") detail::run_laguerre(rec, report, g);
    else throw std::invalid_argument("unknown suite '" + name + "'");
  }
  report.sort();
  return report;
}

}  // namespace mpoly

#endif  // MPOLY_SUITE_HPP
