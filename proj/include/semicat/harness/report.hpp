#pragma once

/**
 * @file report.hpp
 * @brief Experiment reports: JSON (schema-stable, round-trips) and a text table.
 */

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "semicat/error.hpp"
#include "semicat/report/check.hpp"

#ifndef SEMICAT_VERSION
#define SEMICAT_VERSION "dev"
#endif

namespace semicat {

struct Report {
  nlohmann::json experiment;  ///< echo of the config
  std::vector<CheckRecord> checks;
  nlohmann::json results = nlohmann::json::object();  ///< computed values (counts, labels)
  std::string artifact_version = SEMICAT_VERSION;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  /// "pass", "fail", or "vacuous-pass" when nothing was checked.
  std::string verdict() const {
    if (!passed()) return "fail";
    return checks.empty() ? "vacuous-pass" : "pass";
  }
  int exit_code() const { return passed() ? 0 : 1; }

  friend bool operator==(const Report&, const Report&) = default;
};

enum class ReportFormat { json, text };

inline ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "text") return ReportFormat::text;
  throw ConfigError("unknown format '" + s + "' (json|text)");
}

inline nlohmann::json report_to_json(const Report& r, bool with_timing = false) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c, with_timing));
  return {{"artifact_version", r.artifact_version},
          {"experiment", r.experiment},
          {"checks", checks},
          {"results", r.results},
          {"verdict", r.verdict()}};
}

inline Report report_from_json(const nlohmann::json& j) {
  Report r;
  try {
    r.artifact_version = j.at("artifact_version").get<std::string>();
    r.experiment = j.at("experiment");
    r.results = j.at("results");
    for (const auto& c : j.at("checks")) r.checks.push_back(check_from_json(c));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("report", e.what());
  }
  if (j.contains("verdict") && j.at("verdict") != r.verdict()) throw ParseError("verdict", "does not match the checks");
  return r;
}

namespace detail {

/// Morphism JSON objects become their one-line literal; everything else is compact JSON.
inline std::string witness_text(const nlohmann::json& w) {
  if (w.is_object() && w.contains("entries") && w.contains("dom") && w.contains("cod")) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.at("entries").size(); ++i) {
      s += i ? ",[" : "[";
      const auto& row = w.at("entries")[i];
      for (std::size_t k = 0; k < row.size(); ++k)
        s += (k ? "," : "") + (row[k].is_string() ? row[k].get<std::string>() : row[k].dump());
      s += "]";
    }
    auto label = [&](const char* key, const char* rank) {
      return w.contains(key) ? w.at(key).get<std::string>() : "F" + std::to_string(w.at(rank).get<std::size_t>());
    };
    return s + "] : " + label("dom_label", "dom") + " -> " + label("cod_label", "cod");
  }
  if (w.is_object()) {
    std::string s;
    for (const auto& [k, v] : w.items()) s += (s.empty() ? "" : ", ") + k + " = " + witness_text(v);
    return s;
  }
  if (w.is_string()) return w.get<std::string>();
  return w.dump();
}

inline std::string pad(std::string s, std::size_t n) {
  if (s.size() < n) s.append(n - s.size(), ' ');
  return s;
}

}  // namespace detail

inline std::string emit_report(const Report& r, ReportFormat format, bool with_timing = false) {
  if (format == ReportFormat::json) return report_to_json(r, with_timing).dump(2) + "\n";
  std::ostringstream out;
  out << "experiment: " << r.experiment.dump() << "\n";
  out << "version:    " << r.artifact_version << "\n";
  if (!r.results.empty())
    for (const auto& [k, v] : r.results.items()) out << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  std::size_t width = 5;
  for (const auto& c : r.checks) width = std::max(width, c.name.size());
  out << detail::pad("check", width) << "  status  regime      cases     seed";
  if (with_timing) out << "      ms";
  out << "\n";
  for (const auto& c : r.checks) {
    out << detail::pad(c.name, width) << "  " << detail::pad(c.passed ? "pass" : "FAIL", 6) << "  "
        << detail::pad(to_string(c.regime), 10) << "  " << detail::pad(std::to_string(c.cases), 8) << "  "
        << detail::pad(c.seed ? std::to_string(*c.seed) : "-", 6);
    if (with_timing && c.timing_ms) {
      std::ostringstream t;
      t.setf(std::ios::fixed);
      t.precision(1);
      t << *c.timing_ms;
      out << "  " << t.str();
    }
    out << "\n";
    if (!c.passed) {
      if (!c.detail.empty()) out << "    reason:  " << c.detail << "\n";
      if (!c.witness.is_null()) out << "    witness: " << detail::witness_text(c.witness) << "\n";
    }
  }
  out << "verdict: " << r.verdict() << "\n";
  return out.str();
}

/// Writes to `path`; throws IoError.
inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw IoError("write to '" + path + "' failed");
}

}  // namespace semicat
