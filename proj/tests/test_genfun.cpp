#include <catch_amalgamated.hpp>

#include "mpoly/genfun.hpp"

using namespace mpoly;

namespace {
const std::vector<Rational> kMus = {Rational(1), Rational(3), Rational(5), Rational(7),
                                    Rational(2), Rational(5, 2), Rational(-1, 2)};
}

TEST_CASE("binomial series") {
  const PowerSeries geo = binomial_series(Rational(1), 5);
  for (long n = 0; n <= 5; ++n) CHECK(geo[n] == Polynomial{Rational(1)});
  CHECK(binomial_series(Rational(1, 2), 4)[2] == Polynomial{Rational(3, 8)});
  CHECK(binomial_series(Rational(0), 4) == PowerSeries::one(4));
  // (1-t)^{-a} (1-t)^{-b} = (1-t)^{-(a+b)}.
  CHECK(binomial_series(Rational(1, 3), 8) * binomial_series(Rational(-5, 2), 8) ==
        binomial_series(Rational(1, 3) + Rational(-5, 2), 8));
}

TEST_CASE("series arithmetic truncates at the smaller order") {
  const PowerSeries a = binomial_series(Rational(1), 3), b = binomial_series(Rational(1), 6);
  CHECK((a * b).order() == 3);
  CHECK((a + b).order() == 3);
  CHECK((a * b)[3] == Polynomial{Rational(4)});
  CHECK_THROWS(PowerSeries::substitute(binomial_series(Rational(1), 3), [](long) { return Polynomial{}; }));
}

TEST_CASE("normalized generating function") {
  for (const auto& mu : kMus)
    for (long ell = 0; ell <= 3; ++ell) {
      const PowerSeries g = ghat_series(mu, ell, 6);
      CHECK(g[0] == m_zero_closed_form(ell));
      const PowerSeries at_zero = binomial_series(half(mu + Rational(1)) - Rational(ell), 6);
      for (long n = 0; n <= 6; ++n) {
        // At x = 0 only the i = 0 term (2l)!/l! of the K-Bessel sum survives.
        CHECK(g[n].coeff(0) == at_zero[n].coeff(0) * m_zero_closed_form(ell).coeff(0));
        CHECK(g[n].degree() == n + ell);
      }
    }
  CHECK_THROWS_AS(ghat_series(Rational(-3), 1, 4), PoleInGamma);
}

TEST_CASE("series oracle against the explicit construction") {
  CHECK(m_from_series(0, Rational(3), 1) == Polynomial{Rational(2), Rational(1)});
  CHECK(m_from_series(2, Rational(3), 1) == Polynomial{Rational(20, 3), Rational(10, 3), Rational(-4), Rational(1, 2)});
  for (const auto& mu : kMus)
    for (long ell = 0; ell <= 3; ++ell)
      for (long j = 0; j <= 10; ++j) CHECK(m_from_series(j, mu, ell) == m_polynomial(j, ell, mu));
}

TEST_CASE("laguerre layer reproduces the classical generating function") {
  for (const auto& mu : kMus) {
    const PowerSeries classic = laguerre_generating_series(mu, 10);
    for (long j = 0; j <= 10; ++j) {
      CHECK(m_from_series(j, mu, 0) == classic[j]);
      CHECK(classic[j] == laguerre(j, mu));
    }
  }
}
