#pragma once

/**
 * @file io.hpp
 * @brief JSON form of finite semirings and name-or-file resolution.
 *
 * File layout: {"name": str, "size": int, "zero": int, "one": int,
 *               "add": [[int]], "mul": [[int]]}
 */

#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "semicat/error.hpp"
#include "semicat/semiring/semiring.hpp"

namespace semicat {

namespace detail {

inline const nlohmann::json& require(const nlohmann::json& j, const char* key) {
  if (!j.is_object()) throw ParseError("<root>", "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(key, "missing field");
  return *it;
}

inline long long require_int(const nlohmann::json& j, const char* key) {
  const auto& v = require(j, key);
  if (!v.is_number_integer()) throw ParseError(key, "expected an integer");
  return v.get<long long>();
}

inline std::vector<std::vector<long long>> require_table(const nlohmann::json& j, const char* key) {
  const auto& v = require(j, key);
  if (!v.is_array()) throw ParseError(key, "expected an array of rows");
  std::vector<std::vector<long long>> out;
  for (std::size_t r = 0; r < v.size(); ++r) {
    const auto& row = v[r];
    const std::string where = std::string(key) + "[" + std::to_string(r) + "]";
    if (!row.is_array()) throw ParseError(where, "expected an array");
    std::vector<long long> cells;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_number_integer())
        throw ParseError(where + "[" + std::to_string(c) + "]", "expected an integer");
      cells.push_back(row[c].get<long long>());
    }
    out.push_back(std::move(cells));
  }
  return out;
}

}  // namespace detail

inline SemiringTables semiring_tables_from_json(const nlohmann::json& j) {
  SemiringTables t;
  const auto& name = detail::require(j, "name");
  if (!name.is_string()) throw ParseError("name", "expected a string");
  t.name = name.get<std::string>();
  t.size = detail::require_int(j, "size");
  t.zero = detail::require_int(j, "zero");
  t.one = detail::require_int(j, "one");
  t.add = detail::require_table(j, "add");
  t.mul = detail::require_table(j, "mul");
  return t;
}

inline nlohmann::json semiring_to_json(const FiniteSemiring& r) {
  auto t = r.tables();
  return {{"name", t.name}, {"size", t.size}, {"zero", t.zero},
          {"one", t.one},   {"add", t.add},   {"mul", t.mul}};
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
}

inline SemiringPtr load_semiring_file(const std::string& path) {
  return Semiring::finite(validate_semiring(semiring_tables_from_json(read_json_file(path))));
}

/// A path to an existing file is loaded as JSON; anything else is a built-in name.
inline SemiringPtr make_semiring(const std::string& name_or_file) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(name_or_file, ec)) return load_semiring_file(name_or_file);
  return builtin_semiring(name_or_file);
}

}  // namespace semicat
