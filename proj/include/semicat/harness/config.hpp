#pragma once

/**
 * @file config.hpp
 * @brief What to run: experiment kind, input, caps, seed, budget.
 *
 * JSON form:
 *   {"kind": "validate"|"ibn"|"aut-groups"|"functor-verify"|"out-group"|"lie-suite",
 *    "input": "<built-in name or file>", "cap": 2, "degree_cap": 2, "seed": 0,
 *    "budget": n?, "output": "path"?, "functor": {...}?, "checks": [...]?, "replay": {...}?}
 * "semiring" and "file" are accepted as aliases of "input".
 */

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "semicat/error.hpp"
#include "semicat/semiring/io.hpp"

namespace semicat {

enum class ExperimentKind { validate, ibn, aut_groups, functor_verify, out_group, lie_suite };

inline const char* to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::validate: return "validate";
    case ExperimentKind::ibn: return "ibn";
    case ExperimentKind::aut_groups: return "aut-groups";
    case ExperimentKind::functor_verify: return "functor-verify";
    case ExperimentKind::out_group: return "out-group";
    case ExperimentKind::lie_suite: return "lie-suite";
  }
  return "";
}

inline ExperimentKind parse_kind(const std::string& s) {
  for (auto k : {ExperimentKind::validate, ExperimentKind::ibn, ExperimentKind::aut_groups,
                 ExperimentKind::functor_verify, ExperimentKind::out_group, ExperimentKind::lie_suite})
    if (s == to_string(k)) return k;
  throw ParseError("kind", "unknown experiment kind '" + s + "'");
}

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::validate;
  std::string input;
  std::size_t cap = 2;         ///< rank cap
  std::size_t degree_cap = 2;  ///< PBW degree cap
  std::uint64_t seed = 0;      ///< always present, so sampled checks can cite it
  std::optional<std::uint64_t> budget;
  std::optional<std::string> output;
  nlohmann::json functor;      ///< functor-verify only; null means identity
  std::vector<std::string> checks;  ///< run only these; empty means all
  nlohmann::json replay;       ///< a failed check record to re-run alone

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Throws ConfigError on violated invariants.
inline void validate_config(const ExperimentConfig& c) {
  if (c.input.empty()) throw ConfigError("input is empty");
  if (c.cap < 1) throw ConfigError("cap must be >= 1");
  if (c.degree_cap < 1) throw ConfigError("degree_cap must be >= 1");
  if (c.budget && *c.budget == 0) throw ConfigError("budget must be positive");
  if (!c.functor.is_null() && c.kind != ExperimentKind::functor_verify)
    throw ConfigError("'functor' applies to functor-verify only");
  if (!c.replay.is_null() && (!c.replay.is_object() || !c.replay.contains("name")))
    throw ConfigError("'replay' must be a check record");
}

inline nlohmann::json config_to_json(const ExperimentConfig& c) {
  nlohmann::json j{{"kind", to_string(c.kind)},
                   {"input", c.input},
                   {"cap", c.cap},
                   {"degree_cap", c.degree_cap},
                   {"seed", c.seed}};
  if (c.budget) j["budget"] = *c.budget;
  if (c.output) j["output"] = *c.output;
  if (!c.functor.is_null()) j["functor"] = c.functor;
  if (!c.checks.empty()) j["checks"] = c.checks;
  if (!c.replay.is_null()) j["replay"] = c.replay;
  return j;
}

namespace detail {

inline std::uint64_t config_uint(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.template get<long long>() >= 0))
    throw ParseError(key, "expected a nonnegative integer");
  return v.template get<std::uint64_t>();
}

inline std::string config_string(const nlohmann::json& j, const char* key) {
  if (!j.at(key).is_string()) throw ParseError(key, "expected a string");
  return j.at(key).template get<std::string>();
}

}  // namespace detail

inline ExperimentConfig config_from_json(const nlohmann::json& j) {
  static const std::set<std::string> known{"kind",   "input",   "semiring", "file",   "cap",   "degree_cap",
                                           "seed",   "budget",  "output",   "functor", "checks", "replay"};
  if (!j.is_object()) throw ParseError("<root>", "expected an object");
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw ParseError(key, "unknown field");
  if (!j.contains("kind")) throw ParseError("kind", "missing");
  ExperimentConfig c;
  c.kind = parse_kind(detail::config_string(j, "kind"));
  int inputs = 0;
  for (const char* key : {"input", "semiring", "file"})
    if (j.contains(key)) {
      c.input = detail::config_string(j, key);
      ++inputs;
    }
  if (inputs != 1) throw ParseError("input", inputs ? "given more than once" : "missing");
  if (j.contains("cap")) c.cap = detail::config_uint(j, "cap");
  if (j.contains("degree_cap")) c.degree_cap = detail::config_uint(j, "degree_cap");
  if (j.contains("seed")) c.seed = detail::config_uint(j, "seed");
  if (j.contains("budget")) c.budget = detail::config_uint(j, "budget");
  if (j.contains("output")) c.output = detail::config_string(j, "output");
  if (j.contains("functor")) c.functor = j.at("functor");
  if (j.contains("checks")) {
    if (!j.at("checks").is_array()) throw ParseError("checks", "expected a list of names");
    for (const auto& n : j.at("checks")) {
      if (!n.is_string()) throw ParseError("checks", "expected a list of names");
      c.checks.push_back(n.template get<std::string>());
    }
  }
  if (j.contains("replay")) c.replay = j.at("replay");
  validate_config(c);
  return c;
}

inline ExperimentConfig load_config_file(const std::string& path) { return config_from_json(read_json_file(path)); }

}  // namespace semicat
