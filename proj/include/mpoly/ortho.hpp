#ifndef MPOLY_ORTHO_HPP
#define MPOLY_ORTHO_HPP

#include <sstream>
#include <string>
#include <vector>

#include "mpoly/exact.hpp"
#include "mpoly/family.hpp"
#include "mpoly/polynomial.hpp"
#include "mpoly/rational.hpp"

namespace mpoly {

/// value * Gamma(mu - 2l + 1): an integral against x^{mu-2l} e^{-x} dx on
/// (0, inf), kept exact by factoring out the transcendental unit.
struct MomentValue {
  Rational value;
  Rational mu;
  long ell = 0;

  friend bool operator==(const MomentValue&, const MomentValue&) = default;
};

/// Exponent mu - 2l of the weight x^{mu-2l} e^{-x}.
inline Rational weight_exponent(const Rational& mu, long ell) { return mu - Rational(2 * ell); }

/// int_0^inf x^{n+mu-2l} e^{-x} dx in units of Gamma(mu-2l+1), i.e. (mu-2l+1)_n.
inline MomentValue moment(long n, const Rational& mu, long ell) {
  const Rational base = weight_exponent(mu, ell) + Rational(1);
  if (is_nonpositive_integer(base)) throw PoleInGamma("moment: Gamma unit has a pole at " + base.str());
  return {pochhammer(base, n), mu, ell};
}

/// Bilinear form <p, q> = int p q x^{mu-2l} e^{-x} dx, extended linearly from moments.
inline MomentValue inner_product(const Polynomial& p, const Polynomial& q, const Rational& mu, long ell) {
  const Polynomial pq = p * q;
  const Rational base = weight_exponent(mu, ell) + Rational(1);
  if (is_nonpositive_integer(base)) throw PoleInGamma("inner_product: Gamma unit has a pole at " + base.str());
  Rational acc(0), m(1);
  for (std::size_t n = 0; n < pq.coeffs().size(); ++n) {
    acc += pq.coeffs()[n] * m;
    m *= base + Rational(static_cast<long>(n));
  }
  return {acc, mu, ell};
}

/// Closed-form squared norm of M_j^{mu,l}:
///   2 Gamma(j+mu+1) Gamma(j+l+(mu+3)/2) Gamma(j-l+(mu+1)/2) / (j! (2j+mu+1) Gamma(j+(mu+1)/2)^2),
/// in units of Gamma(mu-2l+1).
inline MomentValue norm_squared_formula(long j, const Rational& mu, long ell) {
  const Rational J(j);
  const Rational h = half(mu + Rational(1));
  const Rational gammas = GammaRatio{}
                              .num(J + mu + Rational(1))
                              .num(J + Rational(ell) + h + Rational(1))
                              .num(J - Rational(ell) + h)
                              .den(J + h)
                              .den(J + h)
                              .den(weight_exponent(mu, ell) + Rational(1))
                              .reduce();
  return {Rational(2) * gammas / (factorial(j) * (Rational(2) * J + mu + Rational(1))), mu, ell};
}

using GramMatrix = std::vector<std::vector<MomentValue>>;

/// (j, k) entry <M_j, M_k> for 0 <= j, k <= j_max.
inline GramMatrix gram_matrix(long j_max, const Rational& mu, long ell) {
  std::vector<Polynomial> m;
  for (long j = 0; j <= j_max; ++j) m.push_back(m_polynomial(j, ell, mu));
  GramMatrix g(m.size(), std::vector<MomentValue>(m.size()));
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a; b < m.size(); ++b) g[a][b] = g[b][a] = inner_product(m[a], m[b], mu, ell);
  return g;
}

/// One row per line, entries as canonical rational strings.
inline std::string gram_to_csv(const GramMatrix& g) {
  std::ostringstream os;
  for (const auto& row : g) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << row[k].value.str();
    os << "\n";
  }
  return os.str();
}

}  // namespace mpoly

#endif  // MPOLY_ORTHO_HPP
