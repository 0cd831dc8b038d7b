#ifndef MPOLY_SPECIAL_HPP
#define MPOLY_SPECIAL_HPP

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mpoly/errors.hpp"

namespace mpoly {

/// Gamma function for a > 0 via the Lanczos approximation (g = 7, n = 9).
/// Relative error is below 1e-14 on [1/2, 30]; arguments in (0, 1/2) are
/// lifted with Gamma(a) = Gamma(a + 1) / a.
inline double gamma_float(double a) {
  if (!(a > 0.0)) throw DomainError("gamma_float: argument must be positive, got " + std::to_string(a));
  if (a < 0.5) return gamma_float(a + 1.0) / a;

  static constexpr double g = 7.0;
  static constexpr std::array<double, 9> c = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

  const double z = a - 1.0;
  double sum = c[0];
  for (std::size_t i = 1; i < c.size(); ++i) sum += c[i] / (z + static_cast<double>(i));
  const double t = z + g + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * sum;
}

/// Bessel function of the first kind from its ascending series,
///   J_alpha(x) = sum_m (-1)^m (x/2)^(2m+alpha) / (m! Gamma(m+alpha+1)).
/// Valid regime: alpha > -1, 0 <= x <= 40. Summation is carried in long
/// double; past the largest term the series stops once a term drops below
/// 1e-15 of the running sum.
inline double bessel_j(double alpha, double x) {
  if (alpha <= -1.0 || x < 0.0 || x > 40.0)
    throw DomainError("bessel_j: outside series regime (alpha > -1, 0 <= x <= 40)");
  if (x == 0.0) {
    if (alpha == 0.0) return 1.0;
    return alpha > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }

  const long double half = static_cast<long double>(x) / 2.0L;
  const long double q = -half * half;
  long double term = std::pow(half, static_cast<long double>(alpha)) / gamma_float(alpha + 1.0);
  long double sum = term;
  for (int m = 1; m < 500; ++m) {
    term *= q / (static_cast<long double>(m) * (static_cast<long double>(m) + alpha));
    sum += term;
    if (m > half && std::fabs(term) <= 1e-15L * std::fabs(sum)) break;
  }
  return static_cast<double>(sum);
}

}  // namespace mpoly

#endif  // MPOLY_SPECIAL_HPP
