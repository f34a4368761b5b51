#pragma once

/**
 * @file io.hpp
 * @brief Morphism literals: {"semiring": s, "dom": n, "cod": m, "entries": [[v]]}.
 *
 * Non-canonical endpoints add "dom_label"/"cod_label".
 */

#include <string>

#include <json.hpp>

#include "semicat/error.hpp"
#include "semicat/matcat/morphism.hpp"

namespace semicat {

template <SemiringLike S>
nlohmann::json morphism_to_json(const Morphism<S>& f) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < f.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < f.cols(); ++j) row.push_back(f.semiring().render(f.at(i, j)));
    rows.push_back(std::move(row));
  }
  nlohmann::json j{{"semiring", std::string(f.semiring().name())},
                   {"dom", f.rows()},
                   {"cod", f.cols()},
                   {"entries", std::move(rows)}};
  if (!f.dom().is_canonical()) j["dom_label"] = f.dom().label;
  if (!f.cod().is_canonical()) j["cod_label"] = f.cod().label;
  return j;
}

/// Compact one-line literal, e.g. [[1,0],[0,1]] : F2 -> F2.
template <SemiringLike S>
std::string render_literal(const Morphism<S>& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < f.cols(); ++j) s += (j ? "," : "") + f.semiring().render(f.at(i, j));
    s += "]";
  }
  return s + "] : " + f.dom().label + " -> " + f.cod().label;
}

template <SemiringLike S>
Morphism<S> morphism_from_json(const nlohmann::json& j, std::shared_ptr<const S> ring) {
  auto field = [&](const char* key) -> const nlohmann::json& {
    if (!j.is_object() || !j.contains(key)) throw ParseError(key, "missing field");
    return j.at(key);
  };
  auto rank = [&](const char* key) {
    const auto& v = field(key);
    if (!v.is_number_integer() || v.template get<long long>() < 0) throw ParseError(key, "expected a rank");
    return static_cast<std::size_t>(v.template get<long long>());
  };
  const std::size_t n = rank("dom"), m = rank("cod");
  FreeObject dom = FreeObject::canonical(n), cod = FreeObject::canonical(m);
  if (j.contains("dom_label")) dom.label = j.at("dom_label").template get<std::string>();
  if (j.contains("cod_label")) cod.label = j.at("cod_label").template get<std::string>();
  const auto& rows = field("entries");
  if (!rows.is_array() || rows.size() != n) throw ParseError("entries", "expected " + std::to_string(n) + " rows");
  std::vector<typename S::value_type> e;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = "entries[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != m)
      throw ParseError(where, "expected " + std::to_string(m) + " values");
    for (std::size_t c = 0; c < m; ++c) {
      const auto& v = rows[i][c];
      std::string text = v.is_string() ? v.template get<std::string>() : v.dump();
      try {
        e.push_back(ring->parse(text));
      } catch (const Error& err) {
        throw ParseError(where + "[" + std::to_string(c) + "]", err.what());
      }
    }
  }
  return Morphism<S>(std::move(ring), std::move(dom), std::move(cod), std::move(e));
}

}  // namespace semicat
