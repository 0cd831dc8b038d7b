#ifndef MPOLY_GENFUN_HPP
#define MPOLY_GENFUN_HPP

#include <functional>
#include <stdexcept>
#include <vector>

#include "mpoly/exact.hpp"
#include "mpoly/family.hpp"
#include "mpoly/polynomial.hpp"
#include "mpoly/rational.hpp"

namespace mpoly {

/// Formal power series in t truncated after t^order, with polynomial-in-x
/// coefficients. Every operation truncates at the smaller order.
class PowerSeries {
 public:
  explicit PowerSeries(long order) : c_(static_cast<std::size_t>(check(order)) + 1) {}
  PowerSeries(long order, std::vector<Polynomial> coeffs) : c_(std::move(coeffs)) {
    c_.resize(static_cast<std::size_t>(check(order)) + 1);
  }

  static PowerSeries one(long order) {
    PowerSeries s(order);
    s.c_[0] = Polynomial{Rational(1)};
    return s;
  }

  long order() const { return static_cast<long>(c_.size()) - 1; }
  const Polynomial& operator[](long k) const { return c_.at(static_cast<std::size_t>(k)); }
  Polynomial& operator[](long k) { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<Polynomial>& coeffs() const { return c_; }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (long k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
    return r;
  }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (long i = 0; i <= r.order(); ++i) {
      if (a[i].is_zero()) continue;
      for (long k = 0; i + k <= r.order(); ++k) r[i + k] += a[i] * b[k];
    }
    return r;
  }
  friend PowerSeries operator*(PowerSeries a, const Polynomial& p) {
    for (auto& c : a.c_) c = c * p;
    return a;
  }
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  /// sum_n a(n) w^n for a series w without constant term.
  static PowerSeries substitute(const PowerSeries& w, const std::function<Polynomial(long)>& a) {
    if (!w[0].is_zero()) throw std::invalid_argument("PowerSeries::substitute: inner series has a constant term");
    PowerSeries result(w.order());
    PowerSeries wn = one(w.order());
    for (long n = 0; n <= w.order(); ++n) {
      const Polynomial an = a(n);
      if (!an.is_zero())
        for (long k = n; k <= w.order(); ++k) result[k] += wn[k] * an;
      wn = wn * w;
    }
    return result;
  }

 private:
  static long check(long order) {
    if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
    return order;
  }
  std::vector<Polynomial> c_;
};

/// (1 - t)^{-gamma} = sum_n (gamma)_n / n! t^n.
inline PowerSeries binomial_series(const Rational& gamma, long order) {
  PowerSeries s(order);
  for (long n = 0; n <= order; ++n) s[n] = Polynomial{pochhammer(gamma, n) / factorial(n)};
  return s;
}

/// t / (1 - t).
inline PowerSeries t_over_one_minus_t(long order) {
  PowerSeries s(order);
  for (long n = 1; n <= order; ++n) s[n] = Polynomial{Rational(1)};
  return s;
}

/// Rationally normalized generating function
///
///   Ghat(t, x) = (1-t)^{l-(mu+1)/2} * E * S_I * S_K,
///   E   = exp(-x w / 2),                       w = t/(1-t)
///   S_I = sum_m (x w / 4)^{2m} / (m! (mu/2+1)_m)
///   S_K = sum_{i<=l} (2l-i)!/((l-i)! i!) x^i (1-t)^{-i}.
///
/// The Bessel-function prefactors have been absorbed so that every
/// coefficient is rational for rational mu.
inline PowerSeries ghat_series(const Rational& mu, long ell, long order) {
  MPolyKey{0, ell, mu}.validate();
  const Rational bessel_index = mu / Rational(2) + Rational(1);
  if (is_nonpositive_integer(bessel_index)) throw PoleInGamma("ghat_series: (mu/2+1)_m vanishes");

  const PowerSeries w = t_over_one_minus_t(order);
  const PowerSeries e = PowerSeries::substitute(w, [](long n) {
    Rational c = pow(Rational(-1, 2), n) / factorial(n);
    return Polynomial::monomial(c, static_cast<std::size_t>(n));
  });
  const PowerSeries s_i = PowerSeries::substitute(w, [&](long n) {
    if (n % 2 != 0) return Polynomial{};
    const long m = n / 2;
    Rational c = pow(Rational(1, 4), n) / (factorial(m) * pochhammer(bessel_index, m));
    return Polynomial::monomial(c, static_cast<std::size_t>(n));
  });
  PowerSeries s_k(order);
  for (long i = 0; i <= ell; ++i) {
    const Polynomial weight = Polynomial::monomial(kbessel_weight(ell, i, 0), static_cast<std::size_t>(i));
    s_k = s_k + binomial_series(Rational(i), order) * weight;
  }
  const PowerSeries front = binomial_series(half(mu + Rational(1)) - Rational(ell), order);
  return front * e * s_i * s_k;
}

/// M_j recovered from the generating function:
///   (mu+1)_j / ((mu+1)/2)_j * [t^j] Ghat.
/// The series is built at order j + 2 and, as a truncation guard, again at
/// order j + 6; the two t^j coefficients must agree.
inline Polynomial m_from_series(long j, const Rational& mu, long ell) {
  const PowerSeries s = ghat_series(mu, ell, j + 2);
  const PowerSeries guard = ghat_series(mu, ell, j + 6);
  if (s[j] != guard[j]) throw std::logic_error("m_from_series: truncation inconsistency");
  const Rational scale = pochhammer(mu + Rational(1), j) / pochhammer(half(mu + Rational(1)), j);
  return s[j] * scale;
}

/// Classical Laguerre generating function (1-t)^{-alpha-1} exp(-x t/(1-t)).
inline PowerSeries laguerre_generating_series(const Rational& alpha, long order) {
  const PowerSeries e = PowerSeries::substitute(t_over_one_minus_t(order), [](long n) {
    Rational c = pow(Rational(-1), n) / factorial(n);
    return Polynomial::monomial(c, static_cast<std::size_t>(n));
  });
  return binomial_series(alpha + Rational(1), order) * e;
}

}  // namespace mpoly

#endif  // MPOLY_GENFUN_HPP
