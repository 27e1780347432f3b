#pragma once

/**
 * @file report_io.hpp
 * @brief Line-oriented text and JSON forms of verification reports.
 *
 * JSON output is stable-ordered (object keys sorted, shifts ascending) so
 * repeated runs serialize byte-identically.
 */

#include <string>

#include <json.hpp>

#include "cycloseq/spectra.hpp"

namespace cycloseq {

inline std::string status_string(const VerificationReport& r) {
  return r.passed() ? "pass" : "fail";
}

/// One line per report, e.g.
/// "family=hall q=31 x=-2 pair=[3,0] mismatches=0 distinct=6 values={-9:5,...} status=pass".
inline std::string to_text(const VerificationReport& r) {
  std::string out = "family=" + std::string(family_name(r.descriptor.family));
  out += " q=" + std::to_string(r.descriptor.q);
  if (r.descriptor.x) out += " x=" + std::to_string(r.descriptor.x->x);
  out += " pair=[" + std::to_string(r.pair.first) + "," + std::to_string(r.pair.second) + "]";
  out += " mismatches=" + std::to_string(r.mismatch_count);
  out += " distinct=" + std::to_string(r.distinct_values);
  out += " values={";
  bool first = true;
  for (const auto& [value, count] : r.histogram) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(value) + ":" + std::to_string(count);
  }
  out += "}";
  out += " orbit=" + std::string(r.orbit_size_ok ? "ok" : "bad");
  out += " perfect=" + std::string(r.conjugates_perfect ? "ok" : "bad");
  out += " status=" + status_string(r);
  return out;
}

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json values = nlohmann::json::object();
  for (const auto& [value, count] : r.histogram) values[std::to_string(value)] = count;
  nlohmann::json j{
      {"family", std::string(family_name(r.descriptor.family))},
      {"q", r.descriptor.q},
      {"x", nullptr},
      {"pair", {r.pair.first, r.pair.second}},
      {"mismatches", r.mismatch_count},
      {"values", values},
      {"status", status_string(r)},
  };
  if (r.descriptor.x) j["x"] = r.descriptor.x->x;
  return j;
}

}  // namespace cycloseq
