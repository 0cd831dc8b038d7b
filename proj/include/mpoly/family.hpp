#ifndef MPOLY_FAMILY_HPP
#define MPOLY_FAMILY_HPP

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "mpoly/errors.hpp"
#include "mpoly/exact.hpp"
#include "mpoly/polynomial.hpp"
#include "mpoly/rational.hpp"
#include "mpoly/report.hpp"
#include "mpoly/special.hpp"

namespace mpoly {

/// Index (j, ell, mu) of one member of the family. mu must avoid the
/// negative integers, where the defining Gamma quotients have poles.
struct MPolyKey {
  long j = 0;
  long ell = 0;
  Rational mu{0};

  void validate() const {
    if (j < 0 || ell < 0) throw std::invalid_argument("MPolyKey: j and ell must be nonnegative");
    if (mu.is_integer() && mu.sign() < 0) throw PoleInGamma("MPolyKey: mu = " + mu.str() + " is a pole");
  }
};

inline Rational half(const Rational& r) { return r / Rational(2); }

/// Laguerre polynomial L_n^alpha(x) = sum_k (-1)^k/k! C(n+alpha, n-k) x^k.
/// Negative n gives the zero polynomial.
inline Polynomial laguerre(long n, const Rational& alpha) {
  if (n < 0) return {};
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  const Rational top = Rational(n) + alpha;
  for (long k = 0; k <= n; ++k) {
    Rational v = binomial(top, n - k) / factorial(k);
    c[static_cast<std::size_t>(k)] = (k % 2 == 0) ? v : -v;
  }
  return Polynomial(std::move(c));
}

/// (2l - i)! / ((l - i - k)! i!), the K-Bessel polynomial weights shifted by k.
inline Rational kbessel_weight(long ell, long i, long k) {
  return factorial(2 * ell - i) / (factorial(ell - i - k) * factorial(i));
}

/// Explicit double-sum construction in terms of Laguerre polynomials:
///
///   M_j = sum_{k=0}^{min(j,l)} (-1)^k/k! * R_k * L_{j-k}^mu(x) * sum_{i=0}^{l-k} w(l,i,k) x^i
///
/// with R_k = Gamma(j+mu+1)/Gamma(j-k+mu+1) * Gamma(j-k+(mu+1)/2)/Gamma(j+(mu+1)/2),
/// both quotients reduced exactly through GammaRatio.
inline Polynomial m_polynomial(const MPolyKey& key) {
  key.validate();
  const auto& [j, ell, mu] = key;
  const Rational h = half(mu + Rational(1));
  Polynomial result;
  for (long k = 0; k <= std::min(j, ell); ++k) {
    const Rational r1 = GammaRatio{}.num(Rational(j) + mu + Rational(1)).den(Rational(j - k) + mu + Rational(1)).reduce();
    const Rational r2 = GammaRatio{}.num(Rational(j - k) + h).den(Rational(j) + h).reduce();
    std::vector<Rational> inner(static_cast<std::size_t>(ell - k) + 1);
    for (long i = 0; i <= ell - k; ++i) inner[static_cast<std::size_t>(i)] = kbessel_weight(ell, i, k);
    Rational scale = r1 * r2 / factorial(k);
    if (k % 2 == 1) scale = -scale;
    result += laguerre(j - k, mu) * Polynomial(std::move(inner)) * scale;
  }
  return result;
}

inline Polynomial m_polynomial(long j, long ell, const Rational& mu) { return m_polynomial(MPolyKey{j, ell, mu}); }

namespace detail {

// Same construction with R_k written as prod_{m} 2(m+mu+1)/(2m+mu+1),
// m = j-k .. j-1. The m = 0 factor is identically 2, which continues the
// family analytically to mu = -1 and the negative even integers. Needed for
// the mu-2 term of the mu-recurrence at mu = 1 and mu = 0.
inline Polynomial m_polynomial_continued(long j, long ell, const Rational& mu) {
  if (j < 0) return {};
  Polynomial result;
  for (long k = 0; k <= std::min(j, ell); ++k) {
    Rational r(1);
    for (long m = j - k; m < j; ++m) {
      if (m == 0) {
        r *= Rational(2);
        continue;
      }
      const Rational den = Rational(2 * m) + mu + Rational(1);
      if (den.is_zero()) throw PoleInGamma("M polynomial has a genuine pole at mu = " + mu.str());
      r *= Rational(2) * (Rational(m) + mu + Rational(1)) / den;
    }
    std::vector<Rational> inner(static_cast<std::size_t>(ell - k) + 1);
    for (long i = 0; i <= ell - k; ++i) inner[static_cast<std::size_t>(i)] = kbessel_weight(ell, i, k);
    Rational scale = r / factorial(k);
    if (k % 2 == 1) scale = -scale;
    result += laguerre(j - k, mu) * Polynomial(std::move(inner)) * scale;
  }
  return result;
}

}  // namespace detail

/// M_j with the zero-polynomial convention for negative j.
inline Polynomial m_or_zero(long j, long ell, const Rational& mu) {
  if (j < 0) return {};
  return m_polynomial(j, ell, mu);
}

/// Bottom member M_0 = sum_{k=0}^{l} (2l-k)!/(k!(l-k)!) x^k, independent of mu.
inline Polynomial m_zero_closed_form(long ell) {
  std::vector<Rational> c(static_cast<std::size_t>(ell) + 1);
  for (long k = 0; k <= ell; ++k)
    c[static_cast<std::size_t>(k)] = factorial(2 * ell - k) / (factorial(k) * factorial(ell - k));
  return Polynomial(std::move(c));
}

/// Closed form of M_j(0):
///   2^(2l-mu) Gamma(l+1/2) Gamma(j+mu+1) ((mu+1)/2 - l)_j / (j! Gamma((mu+2)/2) Gamma(j+(mu+1)/2)).
/// Exact whenever mu is a nonnegative integer (the Gamma quotient then pairs
/// with integer offsets and 2^(2l-mu) is rational); otherwise UnreducibleRatio.
inline Rational constant_term(const MPolyKey& key) {
  key.validate();
  const auto& [j, ell, mu] = key;
  if (!mu.is_integer()) throw UnreducibleRatio("constant_term: 2^(-mu) is irrational for mu = " + mu.str());
  const Rational h = half(mu + Rational(1));
  const Rational gammas = GammaRatio{}
                              .num(Rational(ell) + Rational(1, 2))
                              .num(Rational(j) + mu + Rational(1))
                              .den(half(mu + Rational(2)))
                              .den(Rational(j) + h)
                              .reduce();
  return pow(Rational(2), 2 * ell - mu.to_long()) * gammas * pochhammer(h - Rational(ell), j) / factorial(j);
}

/// Floating-point evaluation of the same closed form; needs mu > -1.
inline double constant_term_float(const MPolyKey& key) {
  key.validate();
  const auto& [j, ell, mu] = key;
  const double m = mu.to_double();
  const double h = (m + 1.0) / 2.0;
  double poch = 1.0;
  for (long i = 0; i < j; ++i) poch *= h - static_cast<double>(ell) + static_cast<double>(i);
  double fact = 1.0;
  for (long i = 2; i <= j; ++i) fact *= static_cast<double>(i);
  return std::pow(2.0, 2.0 * static_cast<double>(ell) - m) * gamma_float(static_cast<double>(ell) + 0.5) *
         gamma_float(static_cast<double>(j) + m + 1.0) * poch /
         (fact * gamma_float((m + 2.0) / 2.0) * gamma_float(static_cast<double>(j) + h));
}

/// The recurrence relations satisfied by the family. ell_shift is the
/// corrected ell-recurrence (nu = 2l+1, coefficient x^2/2);
/// ell_shift_literal keeps the coefficient (x/2)^2 and is diagnostic only.
enum class Recurrence { three_term = 1, five_term = 2, mu_shift = 3, ell_shift = 4, mixed = 5, ell_shift_literal = 6 };

inline std::string recurrence_id(Recurrence r) {
  switch (r) {
    case Recurrence::three_term: return "recurrence-1";
    case Recurrence::five_term: return "recurrence-2";
    case Recurrence::mu_shift: return "recurrence-3";
    case Recurrence::ell_shift: return "recurrence-4";
    case Recurrence::mixed: return "recurrence-5";
    case Recurrence::ell_shift_literal: return "recurrence-4-literal";
  }
  return "recurrence-?";
}

/// (theta + a + b x) p.
inline Polynomial apply_first_order(const Polynomial& p, const Rational& a, const Rational& b) {
  return p.theta() + p * a + p.shift(1) * b;
}

/// Coefficients a_{j,k}, k = -2..2, of the five-term relation for x^2 M_j.
/// Callers only request a_{j,-1} for j >= 1 and a_{j,-2} for j >= 2.
inline Rational five_term_coefficient(long j, long ell, const Rational& mu, int k) {
  const Rational J(j), L(ell);
  const Rational s = Rational(2) * J + mu;  // 2j + mu
  const Rational lp = Rational(2) * L + Rational(1);
  switch (k) {
    case 2: return (J + 1) * (J + 2);
    case 1: return Rational(-2) * (J + 1) * (s + 2);
    case 0: {
      const Rational base = Rational(6) * J * J + Rational(6) * (mu + 1) * J + (mu + 1) * (mu + 2);
      const Rational ll = L * (L + 1);
      // At j = 0 the fraction is 4(mu-1)(mu+2)/((mu-1)(mu+3)); cancel the
      // removable factor so mu = 1 stays finite.
      if (j == 0) return base - Rational(4) * (mu + 2) / (mu + 3) * ll;
      const Rational num = Rational(2) * J * J + Rational(2) * (mu + 1) * J + (mu - 1) * (mu + 2);
      return base - Rational(4) * num / ((s - 1) * (s + 3)) * ll;
    }
    case -1:
      return Rational(-2) * (J + mu) * s * (s + lp) * (s - lp) / ((s - 1) * (s + 1));
    case -2:
      return (J + mu - 1) * (J + mu) * (s + Rational(2) * L - 1) * (s - Rational(2) * L - 3) /
             ((s - 3) * (s - 1) * (s - 1)) * (s + lp) * (s - lp) / (s + 1);
    default: throw std::invalid_argument("five_term_coefficient: k out of range");
  }
}

/// LHS - RHS of the chosen recurrence at key; the zero polynomial means the
/// relation holds. Members with negative j are the zero polynomial.
inline Polynomial verify_recurrence(Recurrence kind, const MPolyKey& key) {
  key.validate();
  const auto& [j, ell, mu] = key;
  const Rational J(j), L(ell);
  const Rational s = Rational(2) * J + mu;  // 2j + mu
  auto M = [&](long jj) { return m_or_zero(jj, ell, mu); };

  switch (kind) {
    case Recurrence::three_term: {
      Polynomial lhs = M(j).theta() * Rational(2) - M(j).shift(1);
      Polynomial rhs = M(j + 1) * (J + 1) - M(j) * (mu - Rational(2) * L + 1);
      if (j >= 1) {
        const Rational lp = Rational(2) * L + 1;
        rhs -= M(j - 1) * ((J + mu) * (s + lp) * (s - lp) / ((s + 1) * (s - 1)));
      }
      return lhs - rhs;
    }
    case Recurrence::five_term: {
      Polynomial rhs;
      for (int k = -2; k <= 2; ++k)
        if (j + k >= 0) rhs += M(j + k) * five_term_coefficient(j, ell, mu, k);
      return M(j).shift(2) - rhs;
    }
    case Recurrence::mu_shift: {
      Polynomial lhs = M(j) * (mu * (s - 1)) - M(j - 1) * (Rational(2) * mu * (J + mu));
      const Rational c = (J + mu - 1) * (J + mu);
      const Rational lower = mu - Rational(2);
      Polynomial rhs;
      if (!c.is_zero()) {
        Polynomial m_lower = (lower.is_integer() && lower.sign() < 0) ? detail::m_polynomial_continued(j, ell, lower)
                                                                      : m_polynomial(j, ell, lower);
        rhs = m_lower * c;
      }
      rhs -= m_or_zero(j - 2, ell, mu + Rational(2)).shift(2);
      return lhs - rhs;
    }
    case Recurrence::ell_shift:
    case Recurrence::ell_shift_literal: {
      if (ell < 1) throw std::invalid_argument("ell recurrence requires ell >= 1");
      const Rational nu = Rational(2) * L + 1;
      const Rational coeff = kind == Recurrence::ell_shift ? Rational(1, 2) : Rational(1, 4);  // times x^2
      Polynomial lhs = M(j) * (nu * (s - 1)) - M(j - 1) * (Rational(2) * nu * (J + mu));
      Polynomial rhs = m_polynomial(j, ell + 1, mu) * ((s - 1) / Rational(2)) -
                       m_polynomial(j, ell - 1, mu).shift(2) * ((s - 1) * coeff);
      return lhs - rhs;
    }
    case Recurrence::mixed: {
      Polynomial inner = M(j) * (Rational(2) * (s - 1)) - M(j - 1) * (Rational(4) * (J + mu));
      Polynomial lhs = apply_first_order(inner, -(Rational(2) * L + 1), Rational(-1, 2));
      Polynomial rhs = m_or_zero(j - 2, ell, mu + Rational(2)).shift(2) * Rational(2) -
                       m_polynomial(j, ell + 1, mu) * (s - 1);
      return lhs - rhs;
    }
  }
  throw std::invalid_argument("verify_recurrence: unknown kind");
}

/// Builds M_j^{mu,l} upward from the Laguerre layer l = 0 by solving the
/// mixed (mu, l) recurrence for the next layer:
///
///   M_j^{mu,l+1} = [2x^2 M_{j-2}^{mu+2,l} - (theta-2l-1-x/2)(2(2j+mu-1)M_j^{mu,l} - 4(j+mu)M_{j-1}^{mu,l})] / (2j+mu-1)
///
/// Throws DegenerateLeadingFactor if 2j+mu-1 vanishes at any step.
class EllRecurrenceBuilder {
 public:
  Polynomial get(long j, long ell, const Rational& mu) {
    if (j < 0) return {};
    if (ell == 0) return laguerre(j, mu);
    auto key = std::make_tuple(j, ell, mu);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    const long l = ell - 1;
    const Rational J(j);
    const Rational lead = Rational(2) * J + mu - Rational(1);
    if (lead.is_zero())
      throw DegenerateLeadingFactor("2j+mu-1 = 0 at j = " + std::to_string(j) + ", mu = " + mu.str());
    Polynomial inner = get(j, l, mu) * (Rational(2) * lead) - get(j - 1, l, mu) * (Rational(4) * (J + mu));
    Polynomial value = get(j - 2, l, mu + Rational(2)).shift(2) * Rational(2) -
                       apply_first_order(inner, -(Rational(2 * l) + Rational(1)), Rational(-1, 2));
    value *= Rational(1) / lead;
    cache_.emplace(key, value);
    return value;
  }

 private:
  std::map<std::tuple<long, long, Rational>, Polynomial> cache_;
};

inline Polynomial build_via_ell_recurrence(const MPolyKey& key) {
  key.validate();
  EllRecurrenceBuilder builder;
  return builder.get(key.j, key.ell, key.mu);
}

/// Exact solve of target = sum_i c_i basis_i over the rationals.
/// Returns the coefficients, or nullopt when target is outside the span.
inline std::optional<std::vector<Rational>> solve_in_span(const Polynomial& target,
                                                          const std::vector<Polynomial>& basis) {
  long rows = target.degree() + 1;
  for (const auto& b : basis) rows = std::max(rows, b.degree() + 1);
  const std::size_t n = basis.size();
  // Augmented matrix, one row per power of x.
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(rows), std::vector<Rational>(n + 1));
  for (long r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = basis[c].coeff(static_cast<std::size_t>(r));
    a[r][n] = target.coeff(static_cast<std::size_t>(r));
  }
  std::vector<long> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const Rational f = a[r][col] / a[row][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_col.push_back(static_cast<long>(col));
    ++row;
  }
  for (std::size_t r = row; r < a.size(); ++r)
    if (!a[r][n].is_zero()) return std::nullopt;
  std::vector<Rational> sol(n);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) sol[pivot_col[r]] = a[r][n] / a[r][pivot_col[r]];
  return sol;
}

/// True when x M_0^{mu,l} is NOT a combination of M_1^{mu,l} and M_0^{mu,l},
/// i.e. no three-term recurrence for multiplication by x can start the family.
/// For l = 0 (Laguerre) the combination exists and the result is false.
inline bool three_term_impossibility(const Rational& mu, long ell = 1) {
  const Polynomial m0 = m_polynomial(0, ell, mu);
  const Polynomial m1 = m_polynomial(1, ell, mu);
  return !solve_in_span(m0.shift(1), {m1, m0}).has_value();
}

/// Exact check of the classical Laguerre identities and the summation
/// formula for 0 <= n <= n_max and every alpha in alphas.
inline VerificationReport laguerre_identity_suite(long n_max, const std::vector<Rational>& alphas) {
  VerificationReport report;
  report.suite = "laguerre";
  auto record = [&](const std::string& id, long n, const Rational& alpha, const Polynomial& residual) {
    report.add({id, n, std::nullopt, alpha, residual.is_zero() ? Status::pass : Status::fail, residual.str(), 0});
  };
  for (const auto& alpha : alphas) {
    for (long n = 0; n <= n_max; ++n) {
      const Rational N(n);
      auto Ln = [&](long k, const Rational& a) { return laguerre(k, a); };
      const Polynomial L = Ln(n, alpha);

      record("laguerre-x-three-term", n, alpha,
             L.shift(1) - (Ln(n + 1, alpha) * -(N + 1) + L * (Rational(2) * N + alpha + 1) -
                           Ln(n - 1, alpha) * (N + alpha)));
      record("laguerre-derivative-difference", n, alpha,
             L.derivative() - (Ln(n - 1, alpha).derivative() - Ln(n - 1, alpha)));
      record("laguerre-derivative-shift", n, alpha, L.derivative() + Ln(n - 1, alpha + 1));
      record("laguerre-theta", n, alpha, L.theta() - (L * N - Ln(n - 1, alpha) * (N + alpha)));
      record("laguerre-ode", n, alpha,
             L.derivative().derivative().shift(1) + L.derivative() * (alpha + 1) - L.derivative().shift(1) + L * N);
      record("laguerre-x-alpha-shift", n, alpha,
             Ln(n, alpha + 1).shift(1) - (L * (N + alpha + 1) - Ln(n + 1, alpha) * (N + 1)));
      record("laguerre-lower", n, alpha, Ln(n - 1, alpha) - (L - Ln(n, alpha - 1)));

      Polynomial deriv_sum, shifted_sum, d = L;
      for (long k = 0; k <= n; ++k) {
        deriv_sum += d;
        d = d.derivative();
        shifted_sum += Ln(n - k, alpha + Rational(k)) * (k % 2 == 0 ? Rational(1) : Rational(-1));
      }
      const Polynomial target = Ln(n, alpha - 1);
      record("laguerre-summation", n, alpha, deriv_sum - target);
      record("laguerre-summation-shifted", n, alpha, shifted_sum - target);
    }
  }
  report.sort();
  return report;
}

}  // namespace mpoly

#endif  // MPOLY_FAMILY_HPP
