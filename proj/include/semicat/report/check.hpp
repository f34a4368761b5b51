#pragma once

/**
 * @file check.hpp
 * @brief One verified property: how it was checked and what broke it.
 */

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace semicat {

enum class Regime { exhaustive, sampled };

inline const char* to_string(Regime r) { return r == Regime::exhaustive ? "exhaustive" : "sampled"; }

struct CheckRecord {
  std::string name;
  Regime regime = Regime::exhaustive;
  bool passed = true;
  std::uint64_t cases = 0;
  std::optional<std::uint64_t> seed;  ///< set for sampled checks
  nlohmann::json witness;             ///< null unless failed
  std::string detail;
  std::optional<double> timing_ms;

  /// Folds a sub-sweep into this record: sampled wins, first failure wins.
  void absorb(Regime r, std::uint64_t n) {
    if (r == Regime::sampled) regime = Regime::sampled;
    cases += n;
  }
  void fail(nlohmann::json w, std::string why) {
    if (!passed) return;
    passed = false;
    witness = std::move(w);
    detail = std::move(why);
  }

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

inline nlohmann::json to_json(const CheckRecord& c, bool with_timing = false) {
  nlohmann::json j{{"name", c.name},
                   {"regime", to_string(c.regime)},
                   {"status", c.passed ? "pass" : "fail"},
                   {"cases", c.cases}};
  if (c.seed) j["seed"] = *c.seed;
  if (!c.witness.is_null()) j["witness"] = c.witness;
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (with_timing && c.timing_ms) j["timing_ms"] = *c.timing_ms;
  return j;
}

inline CheckRecord check_from_json(const nlohmann::json& j) {
  CheckRecord c;
  c.name = j.at("name").get<std::string>();
  c.regime = j.at("regime").get<std::string>() == "sampled" ? Regime::sampled : Regime::exhaustive;
  c.passed = j.at("status").get<std::string>() == "pass";
  c.cases = j.at("cases").get<std::uint64_t>();
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("witness")) c.witness = j.at("witness");
  if (j.contains("detail")) c.detail = j.at("detail").get<std::string>();
  if (j.contains("timing_ms")) c.timing_ms = j.at("timing_ms").get<double>();
  return c;
}

}  // namespace semicat
