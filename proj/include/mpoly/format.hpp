#ifndef MPOLY_FORMAT_HPP
#define MPOLY_FORMAT_HPP

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mpoly/family.hpp"
#include "mpoly/ortho.hpp"
#include "mpoly/polynomial.hpp"
#include "mpoly/rational.hpp"

namespace mpoly {

/// {"j":J,"ell":L,"mu":"M","coeffs":[["num","den"],...]}, ascending degree.
inline nlohmann::ordered_json coefficients_to_json(const MPolyKey& key, const Polynomial& p) {
  nlohmann::ordered_json j;
  j["j"] = key.j;
  j["ell"] = key.ell;
  j["mu"] = key.mu.str();
  j["coeffs"] = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) j["coeffs"].push_back({c.num_str(), c.den_str()});
  return j;
}

struct CoefficientFile {
  MPolyKey key;
  Polynomial poly;
};

inline CoefficientFile coefficients_from_json(const nlohmann::ordered_json& j) {
  std::vector<Rational> c;
  for (const auto& pair : j.at("coeffs")) {
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("coeffs: expected [num, den] pairs");
    c.push_back(Rational::parse(pair[0].get<std::string>() + "/" + pair[1].get<std::string>()));
  }
  return {{j.at("j").get<long>(), j.at("ell").get<long>(), Rational::parse(j.at("mu").get<std::string>())},
          Polynomial(std::move(c))};
}

/// "num,den" per line, ascending degree.
inline std::string coefficients_to_csv(const Polynomial& p) {
  std::ostringstream os;
  for (const auto& c : p.coeffs()) os << c.num_str() << "," << c.den_str() << "\n";
  return os.str();
}

inline std::string latex(const Rational& r) {
  if (r.is_integer()) return r.str();
  const Rational a = abs(r);
  return std::string(r.sign() < 0 ? "-" : "") + "\\frac{" + a.num_str() + "}{" + a.den_str() + "}";
}

/// Descending degree, e.g. "\frac{1}{2} x^{3} - 4 x^{2} + \frac{10}{3} x + \frac{20}{3}".
inline std::string latex(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long k = p.degree(); k >= 0; --k) {
    const Rational c = p.coeff(static_cast<std::size_t>(k));
    if (c.is_zero()) continue;
    const Rational a = abs(c);
    if (out.empty()) out += c.sign() < 0 ? "-" : "";
    else out += c.sign() < 0 ? " - " : " + ";
    const bool unit = a == Rational(1) && k > 0;
    if (!unit) out += latex(a);
    if (k > 0) {
      if (!unit) out += " ";
      out += k == 1 ? "x" : "x^{" + std::to_string(k) + "}";
    }
  }
  return out;
}

inline nlohmann::ordered_json gram_to_json(const GramMatrix& g, const Rational& mu, long ell) {
  nlohmann::ordered_json j;
  j["mu"] = mu.str();
  j["ell"] = ell;
  j["unit"] = "Gamma(" + (mu - Rational(2 * ell) + Rational(1)).str() + ")";
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& row : g) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& v : row) r.push_back(v.value.str());
    j["entries"].push_back(r);
  }
  return j;
}

}  // namespace mpoly

#endif  // MPOLY_FORMAT_HPP
