#ifndef MPOLY_DIFFOP_HPP
#define MPOLY_DIFFOP_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "mpoly/exact.hpp"
#include "mpoly/family.hpp"
#include "mpoly/polynomial.hpp"
#include "mpoly/rational.hpp"

namespace mpoly {

/// Differential operator in normal form  sum_k c_k(x) theta^k, theta = x d/dx,
/// with Laurent-polynomial coefficients and every theta moved to the right.
/// Composition uses theta o p(x) = p(x) theta + (theta p)(x).
class DiffOperator {
 public:
  using Terms = std::map<long, LaurentPolynomial>;

  DiffOperator() = default;
  DiffOperator(const LaurentPolynomial& c) { add_term(0, c); }  // NOLINT(google-explicit-constructor)
  DiffOperator(const Rational& c) : DiffOperator(LaurentPolynomial(c)) {}  // NOLINT
  DiffOperator(long c) : DiffOperator(Rational(c)) {}  // NOLINT

  static DiffOperator theta() {
    DiffOperator d;
    d.add_term(1, LaurentPolynomial(Rational(1)));
    return d;
  }
  static DiffOperator x_power(long k, const Rational& c = Rational(1)) { return {LaurentPolynomial::monomial(c, k)}; }
  /// theta + a + b x.
  static DiffOperator first_order(const Rational& a, const Rational& b) {
    return theta() + DiffOperator(Rational(a)) + x_power(1, b);
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  /// Highest theta power; -1 for the zero operator.
  long order() const { return t_.empty() ? -1 : t_.rbegin()->first; }
  LaurentPolynomial coeff(long k) const {
    auto it = t_.find(k);
    return it == t_.end() ? LaurentPolynomial{} : it->second;
  }

  DiffOperator& add_term(long k, const LaurentPolynomial& c) {
    if (c.is_zero()) return *this;
    auto [it, inserted] = t_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
    return *this;
  }

  DiffOperator& operator+=(const DiffOperator& o) {
    for (const auto& [k, c] : o.t_) add_term(k, c);
    return *this;
  }
  DiffOperator& operator-=(const DiffOperator& o) {
    for (const auto& [k, c] : o.t_) add_term(k, -c);
    return *this;
  }
  DiffOperator& operator*=(const Rational& s) {
    if (s.is_zero()) {
      t_.clear();
      return *this;
    }
    for (auto& [k, c] : t_) c *= s;
    return *this;
  }
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  friend DiffOperator operator*(DiffOperator a, const Rational& s) { return a *= s; }
  friend DiffOperator operator*(const Rational& s, DiffOperator a) { return a *= s; }

  /// Composition (a o b): b acts first.
  friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
    DiffOperator r;
    for (const auto& [i, ai] : a.t_) {
      for (const auto& [k, bk] : b.t_) {
        // theta^i o bk = sum_r C(i, r) theta^r(bk) theta^(i-r)
        LaurentPolynomial d = bk;
        for (long s = 0; s <= i; ++s) {
          if (d.is_zero()) break;
          r.add_term(i - s + k, ai * d * binomial(Rational(i), s));
          d = d.theta();
        }
      }
    }
    return r;
  }

  friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

  /// Left multiplication by a function of x.
  DiffOperator left_multiply(const LaurentPolynomial& p) const {
    DiffOperator r;
    for (const auto& [k, c] : t_) r.add_term(k, p * c);
    return r;
  }

  LaurentPolynomial apply(const LaurentPolynomial& f) const {
    LaurentPolynomial out;
    LaurentPolynomial d = f;
    long power = 0;
    for (const auto& [k, c] : t_) {
      for (; power < k; ++power) d = d.theta();
      out += c * d;
    }
    return out;
  }

  /// Normal form as text, e.g. "(x^2)*theta^2 + (-x + 3)*theta + (1/2)".
  std::string str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += "(" + it->second.str() + ")";
      if (it->first == 1) out += "*theta";
      if (it->first > 1) out += "*theta^" + std::to_string(it->first);
    }
    return out;
  }

 private:
  Terms t_;
};

inline DiffOperator pow(const DiffOperator& a, long n) {
  DiffOperator r(1L);
  for (long i = 0; i < n; ++i) r = r * a;
  return r;
}

/// Conjugation A -> R^{-1} A R by an elementary transformation R.
struct ConjugationRule {
  enum class Kind {
    negate_x,    // (R f)(x) = f(-x):       x -> -x,    theta -> theta
    mult_exp,    // R = e^{b x}:            theta -> theta + b x
    mult_power,  // R = x^a:                theta -> theta + a
    dilate,      // (R f)(x) = f(c x):      x -> x / c, theta -> theta
  };
  Kind kind;
  Rational param{0};

  static ConjugationRule negate() { return {Kind::negate_x, Rational(0)}; }
  static ConjugationRule exp(const Rational& b) { return {Kind::mult_exp, b}; }
  static ConjugationRule power(const Rational& a) { return {Kind::mult_power, a}; }
  static ConjugationRule dilation(const Rational& c) { return {Kind::dilate, c}; }
};

/// Applies the rules left to right: with rules R1, R2, ... the result is
/// (R1 R2 ...)^{-1} A (R1 R2 ...).
inline DiffOperator conjugate(const DiffOperator& a, const std::vector<ConjugationRule>& rules) {
  DiffOperator cur = a;
  for (const auto& rule : rules) {
    DiffOperator next;
    switch (rule.kind) {
      case ConjugationRule::Kind::negate_x:
        for (const auto& [k, c] : cur.terms()) next.add_term(k, c.substitute_negated());
        break;
      case ConjugationRule::Kind::dilate:
        if (rule.param.is_zero()) throw std::invalid_argument("conjugate: dilation by zero");
        for (const auto& [k, c] : cur.terms()) next.add_term(k, c.substitute_scaled(Rational(1) / rule.param));
        break;
      case ConjugationRule::Kind::mult_exp:
      case ConjugationRule::Kind::mult_power: {
        const DiffOperator image = rule.kind == ConjugationRule::Kind::mult_exp
                                       ? DiffOperator::first_order(Rational(0), rule.param)
                                       : DiffOperator::first_order(rule.param, Rational(0));
        DiffOperator image_power(1L);
        long power = 0;
        for (const auto& [k, c] : cur.terms()) {
          for (; power < k; ++power) image_power = image_power * image;
          next += image_power.left_multiply(c);
        }
        break;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

namespace detail {

// (theta + a - x/2)(theta + b - x/2) - (x/2)^2
inline DiffOperator quadratic_factor(const Rational& a, const Rational& b) {
  return DiffOperator::first_order(a, Rational(-1, 2)) * DiffOperator::first_order(b, Rational(-1, 2)) -
         DiffOperator::x_power(2, Rational(1, 4));
}

}  // namespace detail

/// x^2 P_{mu,l} = A o B with
///   B = (theta-2l-1-x/2)(theta-x/2) - (x/2)^2        (acts first)
///   A = (theta+mu-2l-1-x/2)(theta+mu-x/2) - (x/2)^2.
inline DiffOperator make_x2P(const Rational& mu, long ell) {
  const Rational shift = Rational(2 * ell + 1);
  const DiffOperator b = detail::quadratic_factor(-shift, Rational(0));
  const DiffOperator a = detail::quadratic_factor(mu - shift, mu);
  return a * b;
}

/// The factors composed the other way round (B o A); diagnostic only.
inline DiffOperator make_x2P_reversed(const Rational& mu, long ell) {
  const Rational shift = Rational(2 * ell + 1);
  return detail::quadratic_factor(-shift, Rational(0)) * detail::quadratic_factor(mu - shift, mu);
}

inline DiffOperator make_P(const Rational& mu, long ell) {
  return make_x2P(mu, ell).left_multiply(LaurentPolynomial::monomial(Rational(1), -2));
}

/// Q_mu = x^{-1}(theta^2 + (mu - x) theta - ((mu+1)/2) x).
inline DiffOperator make_Q(const Rational& mu) {
  const DiffOperator t = DiffOperator::theta();
  DiffOperator inner = t * t + (DiffOperator(mu) - DiffOperator::x_power(1)) * t -
                       DiffOperator::x_power(1, (mu + Rational(1)) / Rational(2));
  return inner.left_multiply(LaurentPolynomial::monomial(Rational(1), -1));
}

/// D_{mu,nu} = x^{-2}((theta+nu)(theta+mu+nu) - x^2)(theta(theta+mu) - x^2) - (mu-nu)(mu+nu+2)/2.
inline DiffOperator make_D(const Rational& mu, const Rational& nu) {
  const DiffOperator t = DiffOperator::theta();
  const DiffOperator x2 = DiffOperator::x_power(2);
  const DiffOperator left = (t + DiffOperator(nu)) * (t + DiffOperator(mu + nu)) - x2;
  const DiffOperator right = t * (t + DiffOperator(mu)) - x2;
  return (left * right).left_multiply(LaurentPolynomial::monomial(Rational(1), -2)) -
         DiffOperator((mu - nu) * (mu + nu + Rational(2)) / Rational(2));
}

/// x^2 P M_j - j(j+mu+1) x^2 M_j; zero iff M_j is an eigenfunction.
inline LaurentPolynomial eigen_residual(const MPolyKey& key) {
  const Polynomial m = m_polynomial(key);
  const Rational lambda = Rational(key.j) * (Rational(key.j) + key.mu + Rational(1));
  return make_x2P(key.mu, key.ell).apply(m) - LaurentPolynomial(m.shift(2) * lambda);
}

/// P_{mu,0} == Q_mu^2 - ((mu+1)/2)^2 in normal form.
inline bool square_identity_check(const Rational& mu) {
  const DiffOperator q = make_Q(mu);
  const Rational c = (mu + Rational(1)) / Rational(2);
  return q * q - DiffOperator(c * c) == make_P(mu, 0);
}

inline bool d_symmetry_check(const Rational& mu, const Rational& nu) { return make_D(mu, nu) == make_D(nu, mu); }

/// Conjugating D_{mu,2l+1} by f -> x^{-(2l+1)} e^{-x} f(2x) yields
/// 4 P_{mu,l} + (mu-2l-1)(mu+2l+3)/2.
inline bool conjugation_identity_check(const Rational& mu, long ell) {
  const Rational nu(2 * ell + 1);
  const DiffOperator lhs = conjugate(make_D(mu, nu), {ConjugationRule::power(-nu), ConjugationRule::exp(Rational(-1)),
                                                      ConjugationRule::dilation(Rational(2))});
  const DiffOperator rhs = make_P(mu, ell) * Rational(4) +
                           DiffOperator((mu - nu) * (mu + Rational(2 * ell + 3)) / Rational(2));
  return lhs == rhs;
}

/// Invariance of x^2 P under f -> e^x f(-x).
inline bool involution_check(const Rational& mu, long ell) {
  const DiffOperator op = make_x2P(mu, ell);
  return conjugate(op, {ConjugationRule::exp(Rational(1)), ConjugationRule::negate()}) == op;
}

/// Indicial polynomial sum_k c_k(0) s^k of x^2 P (coefficients evaluated at x = 0).
inline Polynomial indicial_polynomial(const Rational& mu, long ell) {
  const DiffOperator op = make_x2P(mu, ell);
  std::vector<Rational> c(static_cast<std::size_t>(op.order()) + 1);
  for (const auto& [k, coeff] : op.terms()) {
    if (!coeff.is_polynomial()) throw std::logic_error("x^2 P has a singular coefficient");
    c[static_cast<std::size_t>(k)] = coeff.coeff(0);
  }
  return Polynomial(std::move(c));
}

namespace detail {

inline std::vector<long> positive_divisors(long n) {
  std::vector<long> d;
  n = n < 0 ? -n : n;
  for (long i = 1; i * i <= n; ++i) {
    if (n % i != 0) continue;
    d.push_back(i);
    if (i != n / i) d.push_back(n / i);
  }
  return d;
}

// p / (s - r) for a known root r.
inline Polynomial deflate(const Polynomial& p, const Rational& r) {
  const auto& c = p.coeffs();
  std::vector<Rational> q(c.size() - 1);
  Rational carry(0);
  for (std::size_t i = c.size() - 1; i >= 1; --i) {
    carry = c[i] + carry * r;
    q[i - 1] = carry;
  }
  return Polynomial(std::move(q));
}

}  // namespace detail

/// All roots of p, which must split over the rationals; sorted ascending,
/// repeated by multiplicity. Throws if an irrational factor remains.
inline std::vector<Rational> rational_roots(Polynomial p) {
  std::vector<Rational> roots;
  if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  while (p.degree() > 0 && p.coeff(0).is_zero()) {
    roots.push_back(Rational(0));
    p = detail::deflate(p, Rational(0));
  }
  while (p.degree() > 0) {
    // Integer-coefficient multiple of p.
    mpz_class lcm = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.raw().get_den_mpz_t());
    const Rational scale{mpq_class(lcm)};
    const long a0 = (p.coeff(0) * scale).to_long();
    const long an = (p.leading() * scale).to_long();
    bool found = false;
    for (long num : detail::positive_divisors(a0)) {
      for (long den : detail::positive_divisors(an)) {
        for (long sgn : {1L, -1L}) {
          const Rational cand(sgn * num, den);
          if (p.eval(cand).is_zero()) {
            roots.push_back(cand);
            p = detail::deflate(p, cand);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) throw std::domain_error("rational_roots: irreducible factor " + p.str());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Characteristic exponents of P_{mu,l} at the regular singular point x = 0.
inline std::vector<Rational> indicial_roots(const Rational& mu, long ell) {
  return rational_roots(indicial_polynomial(mu, ell));
}

}  // namespace mpoly

#endif  // MPOLY_DIFFOP_HPP
