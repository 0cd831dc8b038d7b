#ifndef MPOLY_REPORT_HPP
#define MPOLY_REPORT_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mpoly/rational.hpp"

namespace mpoly {

enum class Status { pass, fail, reported };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::reported: return "reported";
  }
  return "fail";
}

inline Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "reported") return Status::reported;
  throw std::invalid_argument("unknown status '" + s + "'");
}

/// One checked identity at one parameter point. Parameters that do not apply
/// to an identity are left empty and serialize as null. Extra parameters
/// (x, nu, ...) are folded into the id, e.g. "hankel[x=1/2]".
struct ReportEntry {
  std::string id;
  std::optional<long> j;
  std::optional<long> ell;
  std::optional<Rational> mu;
  Status status = Status::pass;
  std::string residual = "0";
  std::int64_t ms = 0;

  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

/// Ordering key (identity_id, mu, ell, j); absent values sort first.
inline bool entry_less(const ReportEntry& a, const ReportEntry& b) {
  return std::tie(a.id, a.mu, a.ell, a.j) < std::tie(b.id, b.mu, b.ell, b.j);
}

struct VerificationReport {
  std::string suite;
  std::vector<ReportEntry> entries;

  void add(ReportEntry e) { entries.push_back(std::move(e)); }
  void append(const VerificationReport& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  }
  void sort() { std::stable_sort(entries.begin(), entries.end(), entry_less); }

  std::size_t count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [s](const ReportEntry& e) { return e.status == s; }));
  }
  bool any_failed() const { return count(Status::fail) > 0; }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

inline nlohmann::ordered_json to_json(const ReportEntry& e) {
  nlohmann::ordered_json j;
  j["id"] = e.id;
  j["j"] = e.j ? nlohmann::ordered_json(*e.j) : nlohmann::ordered_json(nullptr);
  j["ell"] = e.ell ? nlohmann::ordered_json(*e.ell) : nlohmann::ordered_json(nullptr);
  j["mu"] = e.mu ? nlohmann::ordered_json(e.mu->str()) : nlohmann::ordered_json(nullptr);
  j["status"] = to_string(e.status);
  j["residual"] = e.residual;
  j["ms"] = e.ms;
  return j;
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : r.entries) j["entries"].push_back(to_json(e));
  return j;
}

inline ReportEntry entry_from_json(const nlohmann::ordered_json& j) {
  ReportEntry e;
  e.id = j.at("id").get<std::string>();
  if (!j.at("j").is_null()) e.j = j.at("j").get<long>();
  if (!j.at("ell").is_null()) e.ell = j.at("ell").get<long>();
  if (!j.at("mu").is_null()) e.mu = Rational::parse(j.at("mu").get<std::string>());
  e.status = status_from_string(j.at("status").get<std::string>());
  e.residual = j.at("residual").get<std::string>();
  e.ms = j.at("ms").get<std::int64_t>();
  return e;
}

inline VerificationReport report_from_json(const nlohmann::ordered_json& j) {
  VerificationReport r;
  r.suite = j.at("suite").get<std::string>();
  for (const auto& e : j.at("entries")) r.entries.push_back(entry_from_json(e));
  return r;
}

}  // namespace mpoly

#endif  // MPOLY_REPORT_HPP
