#ifndef MPOLY_EXACT_HPP
#define MPOLY_EXACT_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mpoly/errors.hpp"
#include "mpoly/rational.hpp"

namespace mpoly {

/// Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
inline Rational pochhammer(const Rational& a, long n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative length");
  Rational result(1), term = a;
  for (long i = 0; i < n; ++i) {
    result *= term;
    term += 1;
  }
  return result;
}

inline Rational factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  return pochhammer(Rational(1), n);
}

/// Generalized binomial coefficient for rational top argument.
inline Rational binomial(const Rational& a, long k) {
  if (k < 0) return Rational(0);
  return pochhammer(a - Rational(k) + Rational(1), k) / factorial(k);
}

inline bool is_nonpositive_integer(const Rational& a) { return a.is_integer() && a.sign() <= 0; }

/// Symbolic product  prod Gamma(num_i) / prod Gamma(den_j).
///
/// reduce() collapses it to an exact rational when the arguments can be
/// matched with integer offsets. Arguments are grouped by their residue mod 1;
/// inside a group numerators and denominators are paired in sorted order, each
/// pair becoming a Pochhammer factor. Unpaired positive-integer arguments are
/// plain factorials.
struct GammaRatio {
  std::vector<Rational> numerator_args;
  std::vector<Rational> denominator_args;

  GammaRatio& num(Rational a) {
    numerator_args.push_back(std::move(a));
    return *this;
  }
  GammaRatio& den(Rational a) {
    denominator_args.push_back(std::move(a));
    return *this;
  }

  Rational reduce() const {
    for (const auto* args : {&numerator_args, &denominator_args})
      for (const auto& a : *args)
        if (is_nonpositive_integer(a)) throw PoleInGamma("Gamma pole at argument " + a.str());

    struct Group {
      std::vector<Rational> num, den;
    };
    std::map<Rational, Group> groups;
    for (const auto& a : numerator_args) groups[a.frac()].num.push_back(a);
    for (const auto& a : denominator_args) groups[a.frac()].den.push_back(a);

    Rational result(1);
    for (auto& [residue, g] : groups) {
      std::sort(g.num.begin(), g.num.end());
      std::sort(g.den.begin(), g.den.end());
      if (residue.is_zero()) {
        // Positive integers: Gamma(n) = (n-1)!.
        for (const auto& a : g.num) result *= factorial(a.to_long() - 1);
        for (const auto& a : g.den) result /= factorial(a.to_long() - 1);
        continue;
      }
      if (g.num.size() != g.den.size())
        throw UnreducibleRatio("Gamma ratio has unmatched arguments with residue " + residue.str());
      for (std::size_t i = 0; i < g.num.size(); ++i) {
        const long offset = (g.num[i] - g.den[i]).to_long();
        if (offset >= 0)
          result *= pochhammer(g.den[i], offset);
        else
          result /= pochhammer(g.num[i], -offset);
      }
    }
    return result;
  }
};

inline Rational gamma_ratio_reduce(const GammaRatio& r) { return r.reduce(); }

}  // namespace mpoly

#endif  // MPOLY_EXACT_HPP
