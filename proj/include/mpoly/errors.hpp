#ifndef MPOLY_ERRORS_HPP
#define MPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mpoly {

// A Gamma argument landed on a non-positive integer.
struct PoleInGamma : std::domain_error {
  using std::domain_error::domain_error;
};

// Gamma arguments could not be paired with integer offsets.
struct UnreducibleRatio : std::domain_error {
  using std::domain_error::domain_error;
};

// 2j + mu - 1 vanished while solving the mixed recurrence for the next layer.
struct DegenerateLeadingFactor : std::domain_error {
  using std::domain_error::domain_error;
};

// The symbolic integral left negative powers of x behind.
struct NonPolynomialResidue : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConvergenceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace mpoly

#endif  // MPOLY_ERRORS_HPP
