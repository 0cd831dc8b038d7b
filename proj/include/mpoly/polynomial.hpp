#ifndef MPOLY_POLYNOMIAL_HPP
#define MPOLY_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mpoly/rational.hpp"

namespace mpoly {

namespace detail {

// Appends "c*x^k" to out using the canonical residual format, e.g.
// "-1/2*x^2 + 3*x - 4".
inline void append_term(std::string& out, const Rational& c, long k) {
  const bool first = out.empty();
  Rational mag = abs(c);
  if (first)
    out += c.sign() < 0 ? "-" : "";
  else
    out += c.sign() < 0 ? " - " : " + ";
  const bool unit = mag == Rational(1);
  if (k == 0) {
    out += mag.str();
    return;
  }
  if (!unit) out += mag.str() + "*";
  out += "x";
  if (k != 1) out += "^" + std::to_string(k);
}

}  // namespace detail

/// Dense univariate polynomial over Rational. coeffs()[k] multiplies x^k;
/// trailing zeros are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const Rational& c) { return Polynomial{c}; }
  static Polynomial monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(Rational(1), 1); }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Multiplication by x^k, k >= 0.
  Polynomial shift(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Rational> v(k);
    v.insert(v.end(), c_.begin(), c_.end());
    return Polynomial(std::move(v));
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return Polynomial(std::move(v));
  }

  /// Euler operator x d/dx: x^n -> n x^n.
  Polynomial theta() const {
    std::vector<Rational> v = c_;
    for (std::size_t k = 0; k < v.size(); ++k) v[k] *= Rational(static_cast<long>(k));
    return Polynomial(std::move(v));
  }

  Rational eval(const Rational& x0) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x0 + *it;
    return acc;
  }
  double eval(double x0) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x0 + it->to_double();
    return acc;
  }

  /// p(c x).
  Polynomial substitute_scaled(const Rational& c) const {
    std::vector<Rational> v = c_;
    Rational power(1);
    for (auto& coeff : v) {
      coeff *= power;
      power *= c;
    }
    return Polynomial(std::move(v));
  }
  /// p(-x).
  Polynomial substitute_negated() const { return substitute_scaled(Rational(-1)); }

  /// Canonical text form, highest degree first, e.g. "x^2 - 5*x + 10".
  std::string str() const {
    std::string out;
    for (long k = degree(); k >= 0; --k)
      if (!c_[k].is_zero()) detail::append_term(out, c_[k], k);
    return out.empty() ? "0" : out;
  }
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Sparse Laurent polynomial: exponent -> nonzero coefficient.
class LaurentPolynomial {
 public:
  using Terms = std::map<long, Rational>;

  LaurentPolynomial() = default;
  LaurentPolynomial(const Polynomial& p) {  // NOLINT(google-explicit-constructor)
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
      if (!p.coeffs()[k].is_zero()) t_.emplace(static_cast<long>(k), p.coeffs()[k]);
  }
  LaurentPolynomial(const Rational& c) : LaurentPolynomial(Polynomial::constant(c)) {}  // NOLINT

  static LaurentPolynomial monomial(const Rational& c, long k) {
    LaurentPolynomial r;
    if (!c.is_zero()) r.t_.emplace(k, c);
    return r;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rational coeff(long k) const {
    auto it = t_.find(k);
    return it == t_.end() ? Rational(0) : it->second;
  }
  long min_exponent() const { return t_.empty() ? 0 : t_.begin()->first; }
  long max_exponent() const { return t_.empty() ? -1 : t_.rbegin()->first; }
  bool is_polynomial() const { return t_.empty() || t_.begin()->first >= 0; }

  Polynomial to_polynomial() const {
    if (!is_polynomial()) throw std::domain_error("LaurentPolynomial has negative powers: " + str());
    if (t_.empty()) return {};
    std::vector<Rational> v(static_cast<std::size_t>(t_.rbegin()->first) + 1);
    for (const auto& [k, c] : t_) v[static_cast<std::size_t>(k)] = c;
    return Polynomial(std::move(v));
  }

  LaurentPolynomial& add_term(long k, const Rational& c) {
    if (c.is_zero()) return *this;
    auto [it, inserted] = t_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
    return *this;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [k, c] : o.t_) add_term(k, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (const auto& [k, c] : o.t_) add_term(k, -c);
    return *this;
  }
  LaurentPolynomial& operator*=(const Rational& s) {
    if (s.is_zero()) {
      t_.clear();
      return *this;
    }
    for (auto& [k, c] : t_) c *= s;
    return *this;
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a) { return a *= Rational(-1); }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& s) { return a *= s; }
  friend LaurentPolynomial operator*(const Rational& s, LaurentPolynomial a) { return a *= s; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (const auto& [i, ci] : a.t_)
      for (const auto& [j, cj] : b.t_) r.add_term(i + j, ci * cj);
    return r;
  }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Multiplication by x^k for any integer k.
  LaurentPolynomial shift(long k) const {
    LaurentPolynomial r;
    for (const auto& [e, c] : t_) r.t_.emplace(e + k, c);
    return r;
  }

  LaurentPolynomial theta() const {
    LaurentPolynomial r;
    for (const auto& [k, c] : t_)
      if (k != 0) r.t_.emplace(k, c * Rational(k));
    return r;
  }

  /// p(c x); c must be nonzero.
  LaurentPolynomial substitute_scaled(const Rational& c) const {
    LaurentPolynomial r;
    for (const auto& [k, coeff] : t_) r.t_.emplace(k, coeff * pow(c, k));
    return r;
  }
  LaurentPolynomial substitute_negated() const { return substitute_scaled(Rational(-1)); }

  Rational eval(const Rational& x0) const {
    Rational acc(0);
    for (const auto& [k, c] : t_) acc += c * pow(x0, k);
    return acc;
  }

  std::string str() const {
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) detail::append_term(out, it->second, it->first);
    return out.empty() ? "0" : out;
  }
  friend std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.str(); }

 private:
  Terms t_;
};

}  // namespace mpoly

#endif  // MPOLY_POLYNOMIAL_HPP
