#include <random>

#include <catch_amalgamated.hpp>

#include "mpoly/ortho.hpp"

using namespace mpoly;

TEST_CASE("moments") {
  CHECK(moment(0, Rational(3), 1).value == Rational(1));
  CHECK(moment(1, Rational(3), 1).value == Rational(2));
  CHECK(moment(2, Rational(3), 1).value == Rational(6));
  CHECK_THROWS_AS(moment(1, Rational(1), 1), PoleInGamma);  // Gamma(0)
}

TEST_CASE("inner products") {
  const Rational mu(3);
  const Polynomial m0 = m_polynomial(0, 1, mu), m1 = m_polynomial(1, 1, mu);
  CHECK(inner_product(m0, m0, mu, 1).value == Rational(18));
  CHECK(inner_product(m0, m1, mu, 1).value == Rational(0));
  CHECK(inner_product(m1, m1, mu, 1).value == Rational(48));
}

TEST_CASE("inner product is bilinear and symmetric") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 3), deg(0, 5);
  auto rp = [&] {
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& r : c) r = Rational(num(rng), den(rng));
    return Polynomial(std::move(c));
  };
  const Rational mu(5, 2);
  for (int i = 0; i < 100; ++i) {
    const Polynomial p = rp(), q = rp(), r = rp();
    const Rational a(num(rng), den(rng));
    CHECK(inner_product(p, q, mu, 1) == inner_product(q, p, mu, 1));
    CHECK(inner_product(p * a + r, q, mu, 1).value ==
          a * inner_product(p, q, mu, 1).value + inner_product(r, q, mu, 1).value);
  }
}

TEST_CASE("norm formula") {
  CHECK(norm_squared_formula(0, Rational(3), 1).value == Rational(18));
  CHECK(norm_squared_formula(1, Rational(3), 1).value == Rational(48));
  for (const auto& mu : {Rational(1), Rational(5, 2), Rational(-1, 2)})
    CHECK(norm_squared_formula(0, mu, 0).value == Rational(1));
  // Classical Laguerre norm Gamma(n+alpha+1)/n! in units Gamma(alpha+1).
  for (long n = 0; n <= 8; ++n)
    CHECK(norm_squared_formula(n, Rational(7, 3), 0).value == pochhammer(Rational(10, 3), n) / factorial(n));
}

TEST_CASE("orthogonality in the asserted range") {
  for (long mu : {3, 5, 7})
    for (long ell = 0; 2 * ell + 1 <= mu && ell <= 3; ++ell) {
      const GramMatrix g = gram_matrix(8, Rational(mu), ell);
      for (long j = 0; j <= 8; ++j)
        for (long k = 0; k <= 8; ++k) {
          if (j == k) CHECK(g[j][k].value == norm_squared_formula(j, Rational(mu), ell).value);
          else CHECK(g[j][k].value.is_zero());
        }
    }
}

TEST_CASE("gram matrix examples") {
  const GramMatrix g = gram_matrix(1, Rational(3), 1);
  CHECK(g[0][0].value == Rational(18));
  CHECK(g[1][1].value == Rational(48));
  CHECK(g[0][1].value == Rational(0));
  CHECK(gram_to_csv(g) == "18,0\n0,48\n");
  CHECK(gram_to_csv(gram_matrix(0, Rational(1), 0)) == "1\n");
  const GramMatrix h = gram_matrix(4, Rational(5, 2), 2);
  for (std::size_t a = 0; a < h.size(); ++a)
    for (std::size_t b = 0; b < h.size(); ++b) CHECK(h[a][b] == h[b][a]);
}
