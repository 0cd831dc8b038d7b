#include <random>

#include <catch_amalgamated.hpp>

#include "mpoly/diffop.hpp"

using namespace mpoly;

namespace {

const DiffOperator T = DiffOperator::theta();
DiffOperator X(long k = 1, const Rational& c = Rational(1)) { return DiffOperator::x_power(k, c); }
LaurentPolynomial mono(long k, const Rational& c = Rational(1)) { return LaurentPolynomial::monomial(c, k); }

DiffOperator random_op(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5), exp(-2, 3), ord(0, 3);
  DiffOperator d;
  for (int i = 0; i < 4; ++i) d.add_term(ord(rng), mono(exp(rng), Rational(num(rng))));
  return d;
}

LaurentPolynomial random_laurent(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5), exp(-3, 4);
  LaurentPolynomial p;
  for (int i = 0; i < 4; ++i) p.add_term(exp(rng), Rational(num(rng)));
  return p;
}

std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("normal ordering") {
  CHECK(T * X() == X() * T + X());
  CHECK(X() * T == DiffOperator().add_term(1, mono(1)));
  CHECK(T * X() - X() * T == X());
  CHECK(T.apply(mono(-2)) == mono(-2, Rational(-2)));
  CHECK((T * T).apply(mono(3)) == mono(3, Rational(9)));
  CHECK(DiffOperator(1L).apply(mono(4, Rational(7))) == mono(4, Rational(7)));
}

TEST_CASE("composition agrees with successive application") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const DiffOperator a = random_op(rng), b = random_op(rng), c = random_op(rng);
    const LaurentPolynomial f = random_laurent(rng);
    CHECK((a * b).apply(f) == a.apply(b.apply(f)));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("fourth-order operator") {
  const Rational mu(3);
  const DiffOperator op = make_x2P(mu, 1);
  CHECK(op.order() == 4);
  const Polynomial m0 = m_polynomial(0, 1, mu), m1 = m_polynomial(1, 1, mu);
  CHECK(op.apply(m0).is_zero());
  CHECK(op.apply(m1) == LaurentPolynomial(Polynomial{Rational(0), Rational(0), Rational(20), Rational(10), Rational(-5)}));
  CHECK(eigen_residual({2, 0, Rational(1)}).is_zero());
}

TEST_CASE("eigen-equation on the grid") {
  for (const auto& mu : {Rational(1), Rational(3), Rational(5), Rational(7), Rational(2), Rational(5, 2), Rational(-1, 2)})
    for (long ell = 0; ell <= 3; ++ell)
      for (long j = 0; j <= 8; ++j) CHECK(eigen_residual({j, ell, mu}).is_zero());
}

TEST_CASE("Q and the square identity") {
  const Rational mu(3);
  const Polynomial l1 = laguerre(1, mu);
  // Eigenvalue -(j + (mu+1)/2) = -3 at j = 1, mu = 3.
  CHECK(make_Q(mu).apply(l1) == LaurentPolynomial(l1 * Rational(-3)));
  CHECK(make_Q(mu).order() == 2);
  for (const auto& m : {Rational(1), Rational(2), Rational(3), Rational(5), Rational(7, 2), Rational(1, 2)})
    CHECK(square_identity_check(m));
  // Laguerre functions are eigenfunctions of Q with eigenvalue -(j + (mu+1)/2).
  for (long j = 0; j <= 6; ++j)
    CHECK(make_Q(Rational(5, 2)).apply(laguerre(j, Rational(5, 2))) ==
          LaurentPolynomial(laguerre(j, Rational(5, 2)) * -(Rational(j) + Rational(7, 4))));
}

TEST_CASE("D symmetry") {
  CHECK(d_symmetry_check(Rational(3), Rational(3)));
  CHECK(d_symmetry_check(Rational(3), Rational(5)));
  CHECK(d_symmetry_check(Rational(7, 2), Rational(1)));
  CHECK(make_D(Rational(3), Rational(5)).order() == 4);
}

TEST_CASE("conjugation rules") {
  CHECK(conjugate(T, {ConjugationRule::power(Rational(-3)), ConjugationRule::exp(Rational(-1))}) ==
        T - DiffOperator(Rational(3)) - X());
  CHECK(conjugate(X() * T, {ConjugationRule::dilation(Rational(2))}) == X(1, Rational(1, 2)) * T);

  // Against the defining action on Laurent polynomials.
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const DiffOperator a = random_op(rng);
    const LaurentPolynomial f = random_laurent(rng);
    // x^a conjugation: x^{-a} A (x^a f).
    CHECK(conjugate(a, {ConjugationRule::power(Rational(2))}).apply(f) == mono(-2) * a.apply(mono(2) * f));
    // (R f)(x) = f(3x): R^{-1} A R f evaluated at x is (A f(3 .))(x/3).
    CHECK(conjugate(a, {ConjugationRule::dilation(Rational(3))}).apply(f) ==
          a.apply(f.substitute_scaled(Rational(3))).substitute_scaled(Rational(1, 3)));
    CHECK(conjugate(a, {ConjugationRule::negate()}).apply(f) ==
          a.apply(f.substitute_negated()).substitute_negated());
  }
}

TEST_CASE("conjugation identity and involution") {
  for (const auto& mu : {Rational(1), Rational(2), Rational(3), Rational(5), Rational(7, 2)})
    for (long ell = 0; ell <= 3; ++ell) {
      CHECK(conjugation_identity_check(mu, ell));
      CHECK(involution_check(mu, ell));
    }
  const DiffOperator op = make_x2P(Rational(3), 1);
  const std::vector<ConjugationRule> t = {ConjugationRule::exp(Rational(1)), ConjugationRule::negate()};
  CHECK(conjugate(conjugate(op, t), t) == op);
  CHECK(conjugate(T, t) != T);
}

TEST_CASE("indicial roots") {
  CHECK(indicial_roots(Rational(5), 1) == sorted({Rational(0), Rational(-5), Rational(3), Rational(-2)}));
  CHECK(indicial_roots(Rational(3), 1) == sorted({Rational(0), Rational(0), Rational(3), Rational(-3)}));
  CHECK(indicial_roots(Rational(0), 0) == sorted({Rational(0), Rational(0), Rational(1), Rational(1)}));
  CHECK(indicial_roots(Rational(5, 2), 2) ==
        sorted({Rational(0), Rational(-5, 2), Rational(5), Rational(5, 2)}));
  CHECK(rational_roots(Polynomial{Rational(-1, 4), Rational(0), Rational(1)}) == sorted({Rational(-1, 2), Rational(1, 2)}));
}

TEST_CASE("operator strings") {
  CHECK(DiffOperator().str() == "0");
  CHECK((X() * T + DiffOperator(Rational(1, 2))).str() == "(x)*theta + (1/2)");
}
