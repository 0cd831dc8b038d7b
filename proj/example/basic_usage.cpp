// Builds a few members of the family, checks them against the differential
// equation and the generating function, and prints a small Gram matrix.
#include <iostream>

#include "mpoly/mpoly.hpp"

int main() {
  using namespace mpoly;
  const Rational mu(3);
  const long ell = 1;

  for (long j = 0; j <= 3; ++j) {
    const Polynomial m = m_polynomial(j, ell, mu);
    std::cout << "M_" << j << "^{3,1}(x) = " << m.str() << "\n";
    std::cout << "  eigen residual: " << eigen_residual({j, ell, mu}).str()
              << ", series agrees: " << (m_from_series(j, mu, ell) == m ? "yes" : "no") << "\n";
  }

  std::cout << "\nGram matrix, units Gamma(" << (mu - Rational(2 * ell) + Rational(1)).str() << "):\n"
            << gram_to_csv(gram_matrix(3, mu, ell));

  const auto r = integral_representation_numeric(2, 1, Rational(5, 2), 1.0);
  std::cout << "\nintegral representation at mu=5/2, x=1: lhs " << r.lhs << ", rhs " << r.rhs << "\n";
}
