#ifndef MPOLY_NUMINT_HPP
#define MPOLY_NUMINT_HPP

#include <cmath>
#include <functional>
#include <type_traits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "mpoly/errors.hpp"
#include "mpoly/exact.hpp"
#include "mpoly/family.hpp"
#include "mpoly/polynomial.hpp"
#include "mpoly/rational.hpp"
#include "mpoly/special.hpp"

namespace mpoly {

struct QuadratureConfig {
  int panel_count = 16;
  int nodes_per_panel = 20;
  /// The integration range ends where a bound on |integrand| falls below
  /// this fraction of its peak.
  double truncation_threshold = 1e-17;
  /// Allowed relative change when panel_count is doubled.
  double target_rel_err = 1e-9;
};

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussLegendre(int n) : nodes(static_cast<std::size_t>(n)), weights(static_cast<std::size_t>(n)) {
    if (n < 1) throw std::invalid_argument("GaussLegendre: need at least one node");
    for (int i = 0; i < (n + 1) / 2; ++i) {
      // Newton iteration from the Chebyshev-like initial guess.
      double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = 0.0;
        for (int k = 1; k <= n; ++k) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
        }
        dp = n * (z * p0 - p1) / (z * z - 1.0);
        const double dz = p0 / dp;
        z -= dz;
        if (std::fabs(dz) < 1e-16) break;
      }
      nodes[i] = -z;
      nodes[n - 1 - i] = z;
      weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
  }

  /// Composite rule with `panels` equal panels on [a, b]. The integrand may
  /// return any type with += and * double (e.g. Integral below).
  template <class F>
  auto integrate(F&& f, double a, double b, int panels) const {
    using R = std::decay_t<decltype(f(a))>;
    const double h = (b - a) / panels;
    R total{};
    for (int p = 0; p < panels; ++p) {
      const double mid = a + (p + 0.5) * h;
      R s{};
      for (std::size_t i = 0; i < nodes.size(); ++i) s += f(mid + 0.5 * h * nodes[i]) * weights[i];
      total += s * (0.5 * h);
    }
    return total;
  }
};

/// An integral together with the integral of the absolute integrand; the
/// latter is the magnitude against which rounding and convergence are judged.
struct Integral {
  double value = 0.0;
  double magnitude = 0.0;

  static Integral of(double v) { return {v, std::fabs(v)}; }
  Integral& operator+=(const Integral& o) {
    value += o.value;
    magnitude += o.magnitude;
    return *this;
  }
  Integral operator*(double w) const { return {value * w, magnitude * std::fabs(w)}; }
};

namespace detail {

inline std::vector<double> to_doubles(const Polynomial& p) {
  std::vector<double> c;
  for (const auto& r : p.coeffs()) c.push_back(r.to_double());
  return c;
}

inline double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Sum of |c_k| t^k, a bound for |p| on [-t, t].
inline double abs_horner(const std::vector<double>& c, double t) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + std::fabs(*it);
  return acc;
}

// Sigmoidal map s in [0,1] -> [0,1] whose derivative vanishes to order
// kSigmoidPower - 1 at both ends; it flattens the sin^mu endpoint behaviour.
constexpr int kSigmoidPower = 6;

inline double sigmoid(double s) {
  const double a = std::pow(s, kSigmoidPower), b = std::pow(1.0 - s, kSigmoidPower);
  return a / (a + b);
}
// 1 - sigmoid(s), without the cancellation near s = 1.
inline double sigmoid_complement(double s) { return sigmoid(1.0 - s); }
inline double sigmoid_derivative(double s) {
  const double a = std::pow(s, kSigmoidPower), b = std::pow(1.0 - s, kSigmoidPower);
  return kSigmoidPower * std::pow(s * (1.0 - s), kSigmoidPower - 1) / ((a + b) * (a + b));
}

// First point past the peak of `bound` where it drops below threshold * peak.
inline double cutoff(const std::function<double(double)>& bound, double step, double threshold) {
  double peak = 0.0, t = 0.0;
  for (int i = 0; i < 1000000; ++i, t += step) {
    const double v = bound(t);
    peak = std::max(peak, v);
    if (peak > 0.0 && v < threshold * peak && t > 0.0) return t;
  }
  throw ConvergenceFailure("cutoff: integrand does not decay");
}

inline void gate(const Integral& coarse, const Integral& fine, double target, const std::string& what) {
  const double scale = std::max(fine.magnitude, 1e-300);
  if (!(std::fabs(coarse.value - fine.value) <= target * scale))
    throw ConvergenceFailure(what + ": panel doubling changed the result by " +
                             std::to_string(std::fabs(coarse.value - fine.value) / scale) + " (relative)");
}

inline Rational wallis_odd_mu(long m, const Rational& mu) {
  // int_0^pi cos^m sin^mu = B((m+1)/2, (mu+1)/2) for even m, 0 for odd m.
  if (m % 2 != 0) return Rational(0);
  return GammaRatio{}
      .num(Rational(m + 1, 2))
      .num((mu + Rational(1)) / Rational(2))
      .den((Rational(m) + mu + Rational(2)) / Rational(2))
      .reduce();
}

inline bool is_odd_positive(const Rational& mu) {
  return mu.is_integer() && mu.sign() > 0 && (mu.to_long() % 2 == 1);
}

}  // namespace detail

/// Prefactor 2^mu l! Gamma((mu+1)/2) Gamma(j+(mu+1)/2) / Gamma(j+mu+1), floating point.
inline double integral_prefactor_float(long j, long ell, double mu) {
  double lf = 1.0;
  for (long i = 2; i <= ell; ++i) lf *= static_cast<double>(i);
  const double h = (mu + 1.0) / 2.0;
  return std::pow(2.0, mu) * lf * gamma_float(h) * gamma_float(static_cast<double>(j) + h) /
         gamma_float(static_cast<double>(j) + mu + 1.0);
}

struct PolynomialPair {
  Polynomial lhs;
  Polynomial rhs;
};

/// Symbolic evaluation of the double integral
///
///   x^{2l+1} int_0^pi int_0^inf e^{-x(cosh phi - 1)} L_j^{l+(mu+1)/2}(x(cos th + cosh phi))
///            sin^mu th sinh^{2l+1} phi dphi dth
///
/// for odd mu. With u = cosh phi - 1 the phi-integral becomes
/// int_0^inf e^{-xu} (u^2+2u)^l L(x(cos th + 1 + u)) du, evaluated termwise by
/// int u^n e^{-xu} du = n!/x^{n+1}; the th-integral reduces to Wallis values.
/// rhs is 2^mu l! Gamma((mu+1)/2) Gamma(j+(mu+1)/2)/Gamma(j+mu+1) M_j(2x).
inline PolynomialPair integral_representation_exact(long j, long ell, const Rational& mu) {
  if (!detail::is_odd_positive(mu))
    throw DomainError("integral_representation_exact: mu must be an odd positive integer, got " + mu.str());
  const Rational beta = Rational(ell) + (mu + Rational(1)) / Rational(2);
  const Polynomial lag = laguerre(j, beta);

  Polynomial u_weight{Rational(1)};  // (u^2 + 2u)^l
  for (long i = 0; i < ell; ++i) u_weight = u_weight * Polynomial{Rational(0), Rational(2), Rational(1)};

  // S(p) = int_0^pi (cos th + 1)^p sin^mu th dth.
  std::vector<Rational> s_vals(static_cast<std::size_t>(j) + 1);
  for (long p = 0; p <= j; ++p) {
    Rational acc(0);
    for (long q = 0; q <= p; ++q) acc += binomial(Rational(p), q) * detail::wallis_odd_mu(q, mu);
    s_vals[static_cast<std::size_t>(p)] = acc;
  }

  LaurentPolynomial lhs;
  for (long k = 0; k <= lag.degree(); ++k) {
    // (x (s + u))^k with s = cos th + 1, expanded in u^r s^{k-r}.
    for (long r = 0; r <= k; ++r) {
      const Rational outer = lag.coeff(static_cast<std::size_t>(k)) * binomial(Rational(k), r) *
                             s_vals[static_cast<std::size_t>(k - r)];
      if (outer.is_zero()) continue;
      for (long n = 0; n <= u_weight.degree(); ++n) {
        const Rational c = outer * u_weight.coeff(static_cast<std::size_t>(n)) * factorial(n + r);
        lhs.add_term(2 * ell + k - n - r, c);
      }
    }
  }
  if (!lhs.is_polynomial()) throw NonPolynomialResidue("integral representation left " + lhs.str());

  const Rational pref = pow(Rational(2), mu.to_long()) * factorial(ell) *
                        GammaRatio{}
                            .num((mu + Rational(1)) / Rational(2))
                            .num(Rational(j) + (mu + Rational(1)) / Rational(2))
                            .den(Rational(j) + mu + Rational(1))
                            .reduce();
  return {lhs.to_polynomial(), m_polynomial(j, ell, mu).substitute_scaled(Rational(2)) * pref};
}

struct QuadratureResult {
  double lhs = 0.0;
  double rhs = 0.0;
  /// Integral of |integrand| on the lhs side.
  double magnitude = 0.0;

  /// |lhs - rhs| / |rhs|, except that |rhs| is floored at 1e-6 * magnitude:
  /// at a zero of the rhs only agreement to ~1e-12 of the magnitude is meaningful.
  double rel_err() const { return std::fabs(lhs - rhs) / std::max(std::fabs(rhs), 1e-6 * magnitude); }
};

namespace detail {

inline Integral integral_lhs(const std::vector<double>& lag, long ell, double mu, double x, int panels,
                             double u_max, const GaussLegendre& rule) {
  auto inner = [&](double c) {  // c = cos th + 1
    return rule.integrate(
        [&](double u) {
          return Integral::of(std::exp(-x * u) * std::pow(u * u + 2.0 * u, ell) * horner(lag, x * (c + u)));
        },
        0.0, u_max, panels);
  };
  const Integral outer = rule.integrate(
      [&](double s) {
        // th = pi*sg; both sin th and 1 + cos th = 2 sin^2((pi - th)/2) are
        // taken from whichever of sg, 1 - sg is small.
        const double sg = sigmoid(s), sc = sigmoid_complement(s);
        const double sn = std::sin(std::numbers::pi * std::min(sg, sc));
        if (sn <= 0.0) return Integral{};
        const double half_gap = std::sin(0.5 * std::numbers::pi * sc);
        return inner(2.0 * half_gap * half_gap) * (std::pow(sn, mu) * std::numbers::pi * sigmoid_derivative(s));
      },
      0.0, 1.0, panels);
  return outer * std::pow(x, 2.0 * ell + 1.0);
}

}  // namespace detail

/// Quadrature of the same double integral for any rational mu > -1, x > 0.
/// The u-range is cut where e^{-xu}(u^2+2u)^l sum|a_k|(x(2+u))^k falls below
/// cfg.truncation_threshold of its peak (u_max_scale stretches it). The
/// result must be stable under panel doubling.
inline QuadratureResult integral_representation_numeric(long j, long ell, const Rational& mu, double x,
                                                        const QuadratureConfig& cfg = {},
                                                        double u_max_scale = 1.0) {
  if (!(x > 0.0)) throw DomainError("integral_representation_numeric: x must be positive");
  if (!(mu > Rational(-1))) throw DomainError("integral_representation_numeric: mu must exceed -1");
  const auto lag = detail::to_doubles(laguerre(j, Rational(ell) + (mu + Rational(1)) / Rational(2)));
  auto bound = [&](double u) {
    return std::exp(-x * u) * std::pow(u * u + 2.0 * u + 1e-300, ell) * detail::abs_horner(lag, x * (2.0 + u));
  };
  const double u_max = detail::cutoff(bound, 0.25 / x, cfg.truncation_threshold) * u_max_scale;
  const GaussLegendre rule(cfg.nodes_per_panel);
  const double m = mu.to_double();
  const Integral coarse = detail::integral_lhs(lag, ell, m, x, cfg.panel_count, u_max, rule);
  const Integral fine = detail::integral_lhs(lag, ell, m, x, 2 * cfg.panel_count, u_max, rule);
  detail::gate(coarse, fine, cfg.target_rel_err, "integral_representation_numeric");

  const Polynomial mj = m_polynomial(j, ell, mu);
  return {fine.value, integral_prefactor_float(j, ell, m) * mj.eval(2.0 * x), fine.magnitude};
}

/// Hankel transform of the Laguerre functions:
///   int_0^inf J_mu(xy)(xy)^{1/2} y^{mu+1/2} e^{-y^2/2} L_j^mu(y^2) dy
///     = (-1)^j x^{mu+1/2} e^{-x^2/2} L_j^mu(x^2).
inline QuadratureResult hankel_reproducing_check(long j, const Rational& mu, double x,
                                                 const QuadratureConfig& cfg = {}, double y_max_scale = 1.0) {
  if (!(x > 0.0) || x > 5.0) throw DomainError("hankel_reproducing_check: need 0 < x <= 5");
  if (!(mu > Rational(-1))) throw DomainError("hankel_reproducing_check: mu must exceed -1");
  const auto lag = detail::to_doubles(laguerre(j, mu));
  const double m = mu.to_double();
  auto bound = [&](double y) {
    return std::pow(y, m + 1.0) * std::sqrt(x) * std::exp(-0.5 * y * y) * detail::abs_horner(lag, y * y);
  };
  double y_max = detail::cutoff(bound, 0.05, cfg.truncation_threshold) * y_max_scale;
  if (x * y_max > 40.0) {
    // Stay inside the Bessel series regime; the tail must already be negligible.
    const double capped = 40.0 / x;
    double peak = 0.0;
    for (double y = 0.0; y <= capped; y += 0.05) peak = std::max(peak, bound(y));
    if (bound(capped) > 1e-12 * peak) throw DomainError("hankel_reproducing_check: tail exceeds Bessel series range");
    y_max = capped;
  }
  const GaussLegendre rule(cfg.nodes_per_panel);
  auto f = [&](double y) {
    if (y <= 0.0) return Integral{};
    return Integral::of(bessel_j(m, x * y) * std::sqrt(x * y) * std::pow(y, m + 0.5) * std::exp(-0.5 * y * y) * detail::horner(lag, y * y));
  };
  const Integral coarse = rule.integrate(f, 0.0, y_max, cfg.panel_count);
  const Integral fine = rule.integrate(f, 0.0, y_max, 2 * cfg.panel_count);
  detail::gate(coarse, fine, cfg.target_rel_err, "hankel_reproducing_check");
  const double sign = j % 2 == 0 ? 1.0 : -1.0;
  return {fine.value, sign * std::pow(x, m + 0.5) * std::exp(-0.5 * x * x) * detail::horner(lag, x * x),
          fine.magnitude};
}

}  // namespace mpoly

#endif  // MPOLY_NUMINT_HPP
