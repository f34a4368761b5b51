#pragma once

/**
 * @file module.hpp
 * @brief K-bases of free modules over U(L) and U_p(G) up to a degree cap.
 */

#include <map>
#include <string>
#include <vector>

#include "semicat/lie/pbw.hpp"

namespace semicat {

/// e_{i_1} ... e_{i_n} x with i_1 >= ... >= i_n, stored as exponent vector.
struct ModuleMonomial {
  std::size_t generator = 0;
  Exponents exponents;

  friend auto operator<=>(const ModuleMonomial&, const ModuleMonomial&) = default;
};

/// Element of the free U(L)-module on X: one U(L) coefficient per generator.
struct FreeLieModuleElement {
  std::map<std::size_t, PbwElement> parts;
  friend bool operator==(const FreeLieModuleElement&, const FreeLieModuleElement&) = default;
};

/// Nonincreasing index word of a monomial, largest index first.
inline std::vector<std::size_t> descending_word(const Exponents& a) {
  std::vector<std::size_t> w;
  for (std::size_t i = a.size(); i-- > 0;)
    for (std::uint32_t k = 0; k < a[i]; ++k) w.push_back(i);
  return w;
}

inline std::string render(const ModuleMonomial& m, const std::vector<std::string>& basis_labels,
                          const std::vector<std::string>& generators) {
  std::string s;
  for (auto i : descending_word(m.exponents)) s += basis_labels.at(i) + "*";
  return s + generators.at(m.generator);
}

namespace detail {

/// Nonincreasing words of length n over {0..d-1}, lexicographic, each letter
/// used at most max_exp times.
inline void descending_words(std::size_t d, std::size_t n, std::uint32_t max_exp, std::vector<Exponents>& out) {
  std::vector<std::size_t> word;
  Exponents counts(d, 0);
  auto rec = [&](auto&& self, std::size_t bound) -> void {
    if (word.size() == n) {
      out.push_back(counts);
      return;
    }
    for (std::size_t i = 0; i < bound; ++i) {
      if (counts[i] >= max_exp) continue;
      word.push_back(i);
      ++counts[i];
      self(self, i + 1);
      --counts[i];
      word.pop_back();
    }
  };
  rec(rec, d);
}

inline std::vector<ModuleMonomial> module_basis(std::size_t d, std::size_t generators, std::size_t cap,
                                                std::uint32_t max_exp) {
  std::vector<ModuleMonomial> out;
  for (std::size_t n = 0; n <= cap; ++n) {
    std::vector<Exponents> words;
    descending_words(d, n, max_exp, words);
    for (std::size_t x = 0; x < generators; ++x)
      for (const auto& w : words) out.push_back({x, w});
  }
  return out;
}

}  // namespace detail

/// By degree, then generator, then the descending word lexicographically.
inline std::vector<ModuleMonomial> free_module_basis(const LieAlgebra& L, std::size_t generators, std::size_t cap) {
  return detail::module_basis(L.dim(), generators, cap, UINT32_MAX);
}

/// Exponents capped at p - 1; the full cap is d(p - 1).
inline std::vector<ModuleMonomial> restricted_module_basis(const LieAlgebra& G, long long p, std::size_t generators,
                                                           std::size_t cap) {
  if (p < 2) throw ConfigError("restricted basis needs p >= 2");
  return detail::module_basis(G.dim(), generators, cap, static_cast<std::uint32_t>(p - 1));
}

/// C(d + k - 1, k): multisets of size k from d letters.
inline std::uint64_t multiset_count(std::uint64_t d, std::uint64_t k) {
  if (d == 0) return k == 0 ? 1 : 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (d + i - 1) / i;
  return r;
}

/// The basis monomial as a module element: the word multiplied out in U(L).
inline FreeLieModuleElement module_element(const LieAlgebra& L, const ModuleMonomial& m) {
  PbwElement u = pbw_one(L);
  for (auto i : descending_word(m.exponents)) u = pbw_multiply(u, pbw_from_lie(L, L.basis(i)), L);
  FreeLieModuleElement e;
  e.parts.emplace(m.generator, std::move(u));
  return e;
}

/// u . v for u in U(L).
inline FreeLieModuleElement module_act(const LieAlgebra& L, const PbwElement& u, const FreeLieModuleElement& v) {
  FreeLieModuleElement out;
  for (const auto& [x, c] : v.parts) {
    auto w = pbw_multiply(u, c, L);
    if (!w.is_zero()) out.parts.emplace(x, std::move(w));
  }
  return out;
}

}  // namespace semicat
