#pragma once

/**
 * @file restricted.hpp
 * @brief Restricted (p-)Lie structures: the p-map, its axioms, and U_p(G).
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "semicat/lie/pbw.hpp"
#include "semicat/report/check.hpp"

namespace semicat {

/// g -> g^[p] given on the basis; extended to G by axioms (1) and (3).
struct RestrictedStructure {
  long long p = 0;
  std::vector<LieElement> images;  ///< e_i^[p]
};

/// ad(t g1 + g2)^{p-1}(g1) as a polynomial in t: entry k is the t^k coefficient.
inline std::vector<LieElement> ad_polynomial(const LieAlgebra& L, long long p, const LieElement& g1,
                                             const LieElement& g2) {
  std::vector<LieElement> poly{g1};
  for (long long step = 0; step + 1 < p; ++step) {
    std::vector<LieElement> next(poly.size() + 1, L.zero());
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] = L.add(next[k + 1], L.bracket(g1, poly[k]));
      next[k] = L.add(next[k], L.bracket(g2, poly[k]));
    }
    poly = std::move(next);
  }
  return poly;
}

/// s_i(g1, g2) for i = 1..p-1, with i * s_i the t^{i-1} coefficient.
inline std::vector<LieElement> s_terms(const LieAlgebra& L, long long p, const LieElement& g1, const LieElement& g2) {
  const auto& K = L.coefficients();
  auto poly = ad_polynomial(L, p, g1, g2);
  std::vector<LieElement> s;
  for (long long i = 1; i < p; ++i) s.push_back(L.scale(K.field_inverse(K.from_int(i)), poly.at(i - 1)));
  return s;
}

inline LieElement s_sum(const LieAlgebra& L, long long p, const LieElement& g1, const LieElement& g2) {
  auto r = L.zero();
  for (const auto& s : s_terms(L, p, g1, g2)) r = L.add(r, s);
  return r;
}

inline void check_restricted_shape(const LieAlgebra& G, const RestrictedStructure& R) {
  const auto& K = G.coefficients();
  if (R.p < 2 || K.characteristic() != R.p)
    throw ConfigError("p-map prime " + std::to_string(R.p) + " differs from the characteristic of " + K.name());
  if (R.images.size() != G.dim()) throw DimensionMismatch("p-map needs one image per basis element");
  for (const auto& v : R.images)
    if (v.size() != G.dim()) throw DimensionMismatch("p-map image has the wrong length");
}

/// g^[p]: folds over the basis, (lambda e_i)^[p] = lambda^p e_i^[p] and
/// (a + b)^[p] = a^[p] + b^[p] + sum_i s_i(a, b).
inline LieElement p_map(const LieAlgebra& G, const RestrictedStructure& R, const LieElement& g) {
  const auto& K = G.coefficients();
  const auto p = static_cast<unsigned long long>(R.p);
  auto acc = G.zero();
  auto acc_p = G.zero();
  for (std::size_t i = 0; i < G.dim(); ++i) {
    if (K.is_zero(g[i])) continue;
    auto term = G.scale(g[i], G.basis(i));
    auto term_p = G.scale(K.pow(g[i], p), R.images[i]);
    acc_p = G.add(G.add(acc_p, term_p), s_sum(G, R.p, acc, term));
    acc = G.add(acc, term);
  }
  return acc_p;
}

namespace detail {

using CoeffMatrix = std::vector<std::vector<Coeff>>;

inline CoeffMatrix mat_mul(const CoefficientRing& K, const CoeffMatrix& a, const CoeffMatrix& b) {
  const std::size_t n = a.size();
  CoeffMatrix c(n, std::vector<Coeff>(n, Coeff(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] = K.add(c[i][j], K.mul(a[i][k], b[k][j]));
  return c;
}

inline nlohmann::json lie_json(const LieAlgebra& L, const LieElement& x) { return L.render(x); }

}  // namespace detail

struct RestrictedReport {
  std::vector<CheckRecord> checks;
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

inline nlohmann::json to_json(const RestrictedReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"checks", checks}, {"passed", r.passed()}};
}

struct RestrictedOptions {
  std::size_t samples = 50;
  std::uint64_t seed = 0;
};

/**
 * Axiom (1) on sampled scalars and elements; axiom (2) as the matrix identity
 * ad(g^[p]) = (ad g)^p on the basis and sampled elements; axiom (3) on all
 * basis pairs and sampled pairs. A fourth check compares sum_i s_i(a, b)
 * with (a+b)^p - a^p - b^p computed in U(G).
 */
inline RestrictedReport verify_restricted(const LieAlgebra& G, const RestrictedStructure& R,
                                          const RestrictedOptions& opt = {}) {
  check_restricted_shape(G, R);
  const auto& K = G.coefficients();
  const auto p = static_cast<unsigned long long>(R.p);
  Rng rng(opt.seed);
  RestrictedReport rep;

  std::vector<LieElement> elements;
  for (std::size_t i = 0; i < G.dim(); ++i) elements.push_back(G.basis(i));
  const std::size_t basis_count = elements.size();
  for (std::size_t s = 0; s < opt.samples; ++s) elements.push_back(G.sample(rng));

  {
    CheckRecord c{"axiom-1"};
    c.regime = Regime::sampled;
    c.seed = opt.seed;
    for (const auto& g : elements) {
      const auto lambda = K.sample(rng);
      ++c.cases;
      auto lhs = p_map(G, R, G.scale(lambda, g));
      auto rhs = G.scale(K.pow(lambda, p), p_map(G, R, g));
      if (lhs != rhs)
        c.fail({{"lambda", K.render(lambda)}, {"g", G.render(g)}, {"residual", G.render(G.sub(lhs, rhs))}},
               "(lambda g)^[p] != lambda^p g^[p]");
    }
    rep.checks.push_back(std::move(c));
  }
  {
    CheckRecord c{"axiom-2"};
    if (elements.size() > basis_count) {
      c.regime = Regime::sampled;
      c.seed = opt.seed;
    }
    for (const auto& g : elements) {
      ++c.cases;
      auto ad = G.ad_matrix(g);
      auto power = ad;
      for (unsigned long long i = 1; i < p; ++i) power = detail::mat_mul(K, power, ad);
      auto gp = p_map(G, R, g);
      if (G.ad_matrix(gp) != power)
        c.fail({{"g", G.render(g)}, {"g^[p]", G.render(gp)}}, "ad(g^[p]) != (ad g)^p");
    }
    rep.checks.push_back(std::move(c));
  }
  {
    CheckRecord c{"axiom-3"};
    auto check_pair = [&](const LieElement& a, const LieElement& b) {
      ++c.cases;
      auto lhs = p_map(G, R, G.add(a, b));
      auto rhs = G.add(G.add(p_map(G, R, a), p_map(G, R, b)), s_sum(G, R.p, a, b));
      if (lhs != rhs)
        c.fail({{"g1", G.render(a)}, {"g2", G.render(b)}, {"residual", G.render(G.sub(lhs, rhs))}},
               "(g1+g2)^[p] != g1^[p] + g2^[p] + sum s_i");
    };
    for (std::size_t i = 0; i < basis_count; ++i)
      for (std::size_t j = 0; j < basis_count; ++j) check_pair(elements[i], elements[j]);
    for (std::size_t s = 0; s < opt.samples; ++s) check_pair(G.sample(rng), G.sample(rng));
    if (opt.samples) {
      c.regime = Regime::sampled;
      c.seed = opt.seed;
    }
    rep.checks.push_back(std::move(c));
  }
  {
    // Independent of the t-expansion: the s_i sum is (a+b)^p - a^p - b^p in U(G).
    CheckRecord c{"s-terms-vs-enveloping"};
    auto check_pair = [&](const LieElement& a, const LieElement& b) {
      ++c.cases;
      auto ua = pbw_from_lie(G, a), ub = pbw_from_lie(G, b);
      auto expansion = pbw_sub(G, pbw_sub(G, pbw_power(pbw_add(G, ua, ub), p, G), pbw_power(ua, p, G)),
                               pbw_power(ub, p, G));
      auto want = pbw_from_lie(G, s_sum(G, R.p, a, b));
      if (expansion != want)
        c.fail({{"g1", G.render(a)}, {"g2", G.render(b)}, {"expansion", render(expansion, G)}},
               "sum s_i(g1,g2) differs from (g1+g2)^p - g1^p - g2^p");
    };
    for (std::size_t i = 0; i < basis_count; ++i)
      for (std::size_t j = 0; j < basis_count; ++j) check_pair(elements[i], elements[j]);
    for (std::size_t s = 0; s < std::min<std::size_t>(opt.samples, 10); ++s) check_pair(G.sample(rng), G.sample(rng));
    if (opt.samples) {
      c.regime = Regime::sampled;
      c.seed = opt.seed;
    }
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

/// Throws AxiomViolation naming the first failing axiom.
inline void require_restricted(const LieAlgebra& G, const RestrictedStructure& R, const RestrictedOptions& opt = {}) {
  auto rep = verify_restricted(G, R, opt);
  for (const auto& c : rep.checks)
    if (!c.passed) throw AxiomViolation(c.name, {}, c.detail + " " + c.witness.dump());
}

namespace detail {

/// Rewrites the first exponent >= p using e_i^p = e_i^[p]; recursion ends
/// because each step lowers the degree by p - 1.
inline PbwElement reduce_restricted(const LieAlgebra& G, const RestrictedStructure& R, const PbwElement& u,
                                    bool from_right = false) {
  const auto& K = G.coefficients();
  const auto p = static_cast<std::uint32_t>(R.p);
  PbwElement out;
  for (const auto& [m, c] : u.terms) {
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] >= p && (!hit || from_right)) hit = i;
    if (!hit) {
      add_term(K, out, m, c);
      continue;
    }
    const std::size_t i = *hit;
    Exponents left(m.size(), 0), right(m.size(), 0);
    for (std::size_t k = 0; k < m.size(); ++k) (k < i ? left : right)[k] = m[k];
    left[i] = m[i] - p;
    right[i] = 0;
    auto v = pbw_multiply(pbw_multiply(pbw_monomial(G, left), pbw_from_lie(G, R.images[i]), G), pbw_monomial(G, right), G);
    add_scaled(K, out, reduce_restricted(G, R, v, from_right), c);
  }
  return out;
}

}  // namespace detail

/// Product in U_p(G): straighten, then rewrite e_i^p to e_i^[p].
inline PbwElement restricted_pbw_multiply(const PbwElement& u, const PbwElement& v, const LieAlgebra& G,
                                          const RestrictedStructure& R) {
  return detail::reduce_restricted(G, R, pbw_multiply(u, v, G));
}

/// Same reduction choosing the last offending exponent first (confluence probe).
inline PbwElement restricted_reduce_alternate(const LieAlgebra& G, const RestrictedStructure& R, const PbwElement& u) {
  return detail::reduce_restricted(G, R, u, true);
}

inline PbwElement restricted_reduce(const LieAlgebra& G, const RestrictedStructure& R, const PbwElement& u) {
  return detail::reduce_restricted(G, R, u);
}

}  // namespace semicat
