#pragma once

/**
 * @file io.hpp
 * @brief Lie algebra files:
 *   {"name", "ring": "Z"|"Q"|"zmod:p"|"gf:q", "dim", "labels"?,
 *    "brackets": [[i, j, [[k, c], ...]], ...], "pmap"?: [[i, [[k, c], ...]], ...]}
 * Indices are 0-based; coefficients are integers or strings such as "-1/2".
 */

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "semicat/lie/restricted.hpp"
#include "semicat/semiring/io.hpp"

namespace semicat {

struct LieFile {
  LieAlgebra algebra;
  std::optional<RestrictedStructure> restricted;
};

namespace detail {

inline Coeff coeff_from_json(const nlohmann::json& j, const CoefficientRing& K, const std::string& field) {
  try {
    if (j.is_number_integer()) {
      const auto v = j.template get<long long>();
      // Integers are read in Z and mapped into K.
      return K.kind() == CoefficientRing::Kind::finite ? K.from_int(v) : Coeff(v);
    }
    if (j.is_string()) return K.parse(j.template get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(field, e.what());
  }
  throw ParseError(field, "coefficient must be an integer or a string");
}

inline std::size_t index_from_json(const nlohmann::json& j, std::size_t dim, const std::string& field) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.template get<long long>() >= 0))
    throw ParseError(field, "expected a nonnegative index");
  const auto v = j.template get<std::size_t>();
  if (v >= dim) throw ParseError(field, "index " + std::to_string(v) + " out of range for dim " + std::to_string(dim));
  return v;
}

/// [[k, c], ...] as a coordinate vector.
inline LieElement lie_terms_from_json(const nlohmann::json& j, const CoefficientRing& K, std::size_t dim,
                                      const std::string& field) {
  if (!j.is_array()) throw ParseError(field, "expected a list of [index, coefficient] pairs");
  LieElement v(dim, Coeff(0));
  for (std::size_t t = 0; t < j.size(); ++t) {
    const auto f = field + "[" + std::to_string(t) + "]";
    if (!j[t].is_array() || j[t].size() != 2) throw ParseError(f, "expected [index, coefficient]");
    const auto k = index_from_json(j[t][0], dim, f + "[0]");
    v[k] = K.add(v[k], coeff_from_json(j[t][1], K, f + "[1]"));
  }
  return v;
}

}  // namespace detail

inline LieFile lie_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("<root>", "expected an object");
  for (const char* key : {"ring", "dim", "brackets"})
    if (!j.contains(key)) throw ParseError(key, "missing");
  if (!j.at("ring").is_string()) throw ParseError("ring", "expected a string");
  CoeffRingPtr K;
  try {
    K = CoefficientRing::parse_name(j.at("ring").template get<std::string>());
  } catch (const ConfigError& e) {
    throw ParseError("ring", e.what());
  }
  if (!j.at("dim").is_number_unsigned()) throw ParseError("dim", "expected a nonnegative integer");
  const auto dim = j.at("dim").template get<std::size_t>();
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const auto& l = j.at("labels");
    if (!l.is_array() || l.size() != dim) throw ParseError("labels", "expected " + std::to_string(dim) + " strings");
    for (std::size_t i = 0; i < dim; ++i) {
      if (!l[i].is_string()) throw ParseError("labels[" + std::to_string(i) + "]", "expected a string");
      labels.push_back(l[i].template get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
  }
  std::vector<BracketEntry> entries;
  const auto& br = j.at("brackets");
  if (!br.is_array()) throw ParseError("brackets", "expected a list");
  for (std::size_t t = 0; t < br.size(); ++t) {
    const auto f = "brackets[" + std::to_string(t) + "]";
    if (!br[t].is_array() || br[t].size() != 3) throw ParseError(f, "expected [i, j, [[k, c], ...]]");
    const auto i = detail::index_from_json(br[t][0], dim, f + "[0]");
    const auto jj = detail::index_from_json(br[t][1], dim, f + "[1]");
    const auto v = detail::lie_terms_from_json(br[t][2], *K, dim, f + "[2]");
    for (std::size_t k = 0; k < dim; ++k)
      if (!K->is_zero(v[k])) entries.push_back({i, jj, k, v[k]});
  }
  const auto name = j.contains("name") && j.at("name").is_string() ? j.at("name").template get<std::string>() : "L";
  LieFile out{validate_lie(name, K, labels, entries), std::nullopt};
  if (j.contains("pmap")) {
    const auto& pm = j.at("pmap");
    if (!pm.is_array()) throw ParseError("pmap", "expected a list");
    RestrictedStructure R;
    R.p = K->characteristic();
    if (R.p == 0) throw ParseError("pmap", "a p-map needs a coefficient ring of prime characteristic");
    R.images.assign(dim, out.algebra.zero());
    for (std::size_t t = 0; t < pm.size(); ++t) {
      const auto f = "pmap[" + std::to_string(t) + "]";
      if (!pm[t].is_array() || pm[t].size() != 2) throw ParseError(f, "expected [i, [[k, c], ...]]");
      const auto i = detail::index_from_json(pm[t][0], dim, f + "[0]");
      R.images[i] = detail::lie_terms_from_json(pm[t][1], *K, dim, f + "[1]");
    }
    out.restricted = std::move(R);
  }
  return out;
}

inline LieFile load_lie_file(const std::string& path) { return lie_from_json(read_json_file(path)); }

inline nlohmann::json lie_to_json(const LieAlgebra& L, const std::optional<RestrictedStructure>& R = std::nullopt) {
  const auto& K = L.coefficients();
  auto terms = [&](const LieElement& v) {
    nlohmann::json t = nlohmann::json::array();
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!K.is_zero(v[k])) t.push_back({k, K.render(v[k])});
    return t;
  };
  nlohmann::json br = nlohmann::json::array();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j)
      if (!L.is_zero(L.basis_bracket(i, j))) br.push_back({i, j, terms(L.basis_bracket(i, j))});
  nlohmann::json out{{"name", L.name()}, {"ring", K.name()}, {"dim", L.dim()}, {"labels", L.labels()}, {"brackets", br}};
  if (R) {
    nlohmann::json pm = nlohmann::json::array();
    for (std::size_t i = 0; i < R->images.size(); ++i) pm.push_back({i, terms(R->images[i])});
    out["pmap"] = pm;
  }
  return out;
}

}  // namespace semicat
