#pragma once

/**
 * @file units.hpp
 * @brief Invertible 1x1 matrices over U(L): detection by degree, certified by
 * solving for inverses on a box of low-degree candidates.
 */

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "semicat/lie/pbw.hpp"
#include "semicat/report/check.hpp"

namespace semicat {

struct CyclicUnitsOptions {
  std::uint32_t box_degree = 1;         ///< candidates: all elements of degree <= this
  std::uint64_t box_budget = 4096;      ///< max box size for exhaustive candidates
  std::size_t samples = 500;            ///< box samples when the box is larger
  std::uint64_t seed = 0;
};

struct CyclicUnitsReport {
  std::string algebra, ring;
  std::uint32_t degree_cap = 0;
  std::vector<std::string> units;       ///< K* at degree 0 (finite K and Z); box units for Q
  std::optional<std::uint64_t> count;   ///< absent when K* is infinite
  Regime regime = Regime::exhaustive;
  std::uint64_t box_size = 0;
  std::uint64_t cases = 0;
  std::optional<std::uint64_t> seed;
  bool units_are_constants = true;      ///< every is_unit hit has degree 0 and a K-unit coefficient
  bool certified = true;                ///< inverse search agrees with is_unit on every candidate
  nlohmann::json witness;               ///< first disagreement

  bool passed() const { return units_are_constants && certified; }
};

inline nlohmann::json to_json(const CyclicUnitsReport& r) {
  nlohmann::json j{{"algebra", r.algebra},
                   {"ring", r.ring},
                   {"degree_cap", r.degree_cap},
                   {"units", r.units},
                   {"regime", to_string(r.regime)},
                   {"box_size", r.box_size},
                   {"cases", r.cases},
                   {"units_are_constants", r.units_are_constants},
                   {"certified", r.certified},
                   {"passed", r.passed()}};
  j["count"] = r.count ? nlohmann::json(*r.count) : nlohmann::json(nullptr);
  if (r.seed) j["seed"] = *r.seed;
  if (!r.witness.is_null()) j["witness"] = r.witness;
  return j;
}

namespace detail {

/// Coefficients used to build the candidate box.
inline std::vector<Coeff> coefficient_box(const CoefficientRing& K) {
  if (auto q = K.finite_size()) {
    std::vector<Coeff> v;
    for (std::size_t i = 0; i < *q; ++i) v.push_back(K.element(i));
    return v;
  }
  if (K.kind() == CoefficientRing::Kind::integers) return {-2, -1, 0, 1, 2};
  return {-2, -1, Coeff(-1, 2), 0, Coeff(1, 2), 1, 2};
}

/**
 * Solves sum_k x_k cols[k] = target over the fraction field of K. The columns
 * must be independent (true for left or right multiplication by a nonzero
 * element of a domain), so a solution is unique when it exists.
 */
inline std::optional<std::vector<Coeff>> solve_unique(const CoefficientRing& K, const std::vector<PbwElement>& cols,
                                                      const PbwElement& target) {
  std::map<Exponents, std::size_t> row_of;
  auto row = [&](const Exponents& m) { return row_of.try_emplace(m, row_of.size()).first->second; };
  for (const auto& c : cols)
    for (const auto& [m, x] : c.terms) row(m);
  for (const auto& [m, x] : target.terms) row(m);
  const std::size_t n = cols.size(), rows = row_of.size();
  std::vector<std::vector<Coeff>> a(rows, std::vector<Coeff>(n + 1, Coeff(0)));
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [m, x] : cols[k].terms) a[row_of[m]][k] = x;
  for (const auto& [m, x] : target.terms) a[row_of[m]][n] = x;
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < n && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && K.is_zero(a[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const auto s = K.field_inverse(a[r][c]);
    for (auto& v : a[r]) v = K.mul(v, s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || K.is_zero(a[i][c])) continue;
      const auto f = a[i][c];
      for (std::size_t j = 0; j <= n; ++j) a[i][j] = K.sub(a[i][j], K.mul(f, a[r][j]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!K.is_zero(a[i][n])) return std::nullopt;
  if (r != n) throw Error("solve_unique: dependent columns");
  std::vector<Coeff> x(n);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = a[i][n];
  return x;
}

}  // namespace detail

/**
 * Lists the units of U(L) (as 1x1 automorphisms of F_1) by is_unit and
 * certifies is_unit on a box of candidates u of low degree: for each, the
 * equations u v = 1 and v u = 1 are solved exactly for v of degree
 * <= degree_cap (over K, not just its fraction field).
 */
inline CyclicUnitsReport cyclic_aut_check(const LieAlgebra& L, std::uint32_t degree_cap,
                                          const CyclicUnitsOptions& opt = {}) {
  const auto& K = L.coefficients();
  CyclicUnitsReport rep;
  rep.algebra = L.name();
  rep.ring = K.name();
  rep.degree_cap = degree_cap;

  const auto coeffs = detail::coefficient_box(K);
  for (const auto& c : coeffs) {
    auto u = pbw_scalar(L, c);
    if (is_unit(u, L)) rep.units.push_back(render(u, L));
  }
  if (K.kind() != CoefficientRing::Kind::rationals) rep.count = rep.units.size();

  const auto box_monos = monomials_up_to(L.dim(), std::min(opt.box_degree, degree_cap));
  const auto v_monos = monomials_up_to(L.dim(), degree_cap);
  const auto one = pbw_one(L);
  std::uint64_t box = 1;
  for (std::size_t i = 0; i < box_monos.size() && box <= opt.box_budget; ++i) box *= coeffs.size();
  auto element_at = [&](std::uint64_t code) {
    PbwElement u;
    for (const auto& m : box_monos) {
      detail::add_term(K, u, m, coeffs[code % coeffs.size()]);
      code /= coeffs.size();
    }
    return u;
  };
  auto inverse_exists = [&](const PbwElement& u) {
    if (u.is_zero()) return false;
    std::vector<PbwElement> left, right;
    for (const auto& m : v_monos) {
      auto mono = pbw_monomial(L, m);
      left.push_back(pbw_multiply(u, mono, L));
      right.push_back(pbw_multiply(mono, u, L));
    }
    auto x = detail::solve_unique(K, left, one);
    if (!x) return false;
    PbwElement v;
    for (std::size_t k = 0; k < x->size(); ++k) {
      if (!K.in_ring((*x)[k])) return false;
      detail::add_term(K, v, v_monos[k], (*x)[k]);
    }
    return pbw_multiply(v, u, L) == one;
  };
  std::vector<PbwElement> candidates;
  if (box <= opt.box_budget) {
    rep.box_size = box;
    for (std::uint64_t code = 0; code < box; ++code) candidates.push_back(element_at(code));
  } else {
    rep.regime = Regime::sampled;
    rep.seed = opt.seed;
    Rng rng(opt.seed);
    for (const auto& c : coeffs) candidates.push_back(pbw_scalar(L, c));
    for (std::size_t s = 0; s < opt.samples; ++s) {
      PbwElement u;
      for (const auto& m : box_monos) detail::add_term(K, u, m, coeffs[uniform_index(rng, coeffs.size())]);
      candidates.push_back(std::move(u));
    }
    rep.box_size = candidates.size();
  }
  for (const auto& u : candidates) {
    ++rep.cases;
    const bool claimed = is_unit(u, L);
    if (claimed && (pbw_degree(u) != 0u || !K.is_unit(u.terms.begin()->second)) && rep.units_are_constants) {
      rep.units_are_constants = false;
      rep.witness = {{"u", render(u, L)}, {"reason", "is_unit accepted a non-constant"}};
    }
    const bool found = inverse_exists(u);
    if (found != claimed && rep.certified) {
      rep.certified = false;
      rep.witness = {{"u", render(u, L)}, {"is_unit", claimed}, {"inverse_found", found}};
    }
  }
  return rep;
}

}  // namespace semicat
