#pragma once

/**
 * @file automorphisms.hpp
 * @brief Semiring automorphisms, the inner subgroup and outer coset representatives.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "semicat/error.hpp"
#include "semicat/semiring/semiring.hpp"

namespace semicat {

/**
 * A carrier bijection preserving 0, 1, + and *. Finite carriers store the
 * permutation and its inverse; an empty permutation denotes the identity of an
 * infinite built-in.
 */
struct SemiringAutomorphism {
  std::string name = "identity";
  std::vector<std::uint32_t> permutation;
  std::vector<std::uint32_t> inverse;

  bool is_identity() const {
    for (std::uint32_t i = 0; i < permutation.size(); ++i)
      if (permutation[i] != i) return false;
    return true;
  }

  SemiringValue apply(const SemiringValue& v) const {
    if (permutation.empty()) return v;
    return FiniteElement{permutation.at(std::get<FiniteElement>(v).index)};
  }

  SemiringValue apply_inverse(const SemiringValue& v) const {
    if (inverse.empty()) return v;
    return FiniteElement{inverse.at(std::get<FiniteElement>(v).index)};
  }

  friend bool operator==(const SemiringAutomorphism& a, const SemiringAutomorphism& b) {
    return a.permutation == b.permutation;
  }
};

namespace detail {

inline std::vector<std::uint32_t> invert_permutation(const std::vector<std::uint32_t>& p) {
  std::vector<std::uint32_t> inv(p.size());
  for (std::uint32_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

inline std::string automorphism_name(const FiniteSemiring& r, const std::vector<std::uint32_t>& p) {
  bool identity = true;
  for (std::uint32_t i = 0; i < p.size(); ++i) identity = identity && p[i] == i;
  if (identity) return "identity";
  // Power maps x -> x^e (Frobenius powers on finite fields).
  for (std::uint32_t e = 2; e <= r.size(); ++e) {
    bool match = true;
    for (std::uint32_t x = 0; x < r.size() && match; ++x) {
      std::uint32_t y = r.one();
      for (std::uint32_t k = 0; k < e; ++k) y = r.mul(y, x);
      match = y == p[x];
    }
    if (match) return "power:" + std::to_string(e);
  }
  std::string s = "perm[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

}  // namespace detail

inline SemiringAutomorphism make_automorphism(const FiniteSemiring& r,
                                              std::vector<std::uint32_t> permutation) {
  SemiringAutomorphism a;
  a.name = detail::automorphism_name(r, permutation);
  a.inverse = detail::invert_permutation(permutation);
  a.permutation = std::move(permutation);
  return a;
}

inline SemiringAutomorphism identity_automorphism(const Semiring& r) {
  SemiringAutomorphism a;
  if (r.is_finite()) {
    a.permutation.resize(r.table().size());
    std::iota(a.permutation.begin(), a.permutation.end(), 0u);
    a.inverse = a.permutation;
  }
  return a;
}

/// True iff p is a bijection fixing 0 and 1 that preserves both tables.
inline bool is_semiring_automorphism(const FiniteSemiring& r, const std::vector<std::uint32_t>& p) {
  const auto n = static_cast<std::uint32_t>(r.size());
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto v : p) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  if (p[r.zero()] != r.zero() || p[r.one()] != r.one()) return false;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (p[r.add(a, b)] != r.add(p[a], p[b]) || p[r.mul(a, b)] != r.mul(p[a], p[b]))
        return false;
  return true;
}

/// outer ∘ inner (apply `inner` first).
inline SemiringAutomorphism compose(const FiniteSemiring& r, const SemiringAutomorphism& outer,
                                    const SemiringAutomorphism& inner) {
  std::vector<std::uint32_t> p(r.size());
  for (std::uint32_t i = 0; i < p.size(); ++i) p[i] = outer.permutation[inner.permutation[i]];
  return make_automorphism(r, std::move(p));
}

inline SemiringAutomorphism inverse(const FiniteSemiring& r, const SemiringAutomorphism& a) {
  return make_automorphism(r, a.inverse);
}

/// r -> u r u^{-1}; throws if u is not a two-sided unit.
inline SemiringAutomorphism conjugation(const FiniteSemiring& r, std::uint32_t u) {
  std::optional<std::uint32_t> v;
  for (std::uint32_t w = 0; w < r.size(); ++w)
    if (r.mul(u, w) == r.one() && r.mul(w, u) == r.one()) v = w;
  if (!v) throw NotAnAutomorphism("conjugating element is not a two-sided unit");
  std::vector<std::uint32_t> p(r.size());
  for (std::uint32_t x = 0; x < p.size(); ++x) p[x] = r.mul(r.mul(u, x), *v);
  return make_automorphism(r, std::move(p));
}

struct AutomorphismGroups {
  std::vector<SemiringAutomorphism> aut;       ///< sorted by permutation
  std::vector<SemiringAutomorphism> inn;       ///< conjugations by two-sided units
  std::vector<SemiringAutomorphism> out_reps;  ///< least element of each coset of inn
};

/**
 * Enumerates Aut(R) over bijections fixing 0 and 1, so (k-2)! candidates for
 * |R| = k. Throws SizeLimitExceeded if that count exceeds `enumeration_cap`.
 */
inline AutomorphismGroups automorphism_groups(const FiniteSemiring& r,
                                              std::size_t enumeration_cap = 1'000'000) {
  const auto n = static_cast<std::uint32_t>(r.size());
  std::vector<std::uint32_t> free;
  for (std::uint32_t i = 0; i < n; ++i)
    if (i != r.zero() && i != r.one()) free.push_back(i);
  std::size_t candidates = 1;
  for (std::size_t i = 2; i <= free.size(); ++i) {
    candidates *= i;
    if (candidates > enumeration_cap)
      throw SizeLimitExceeded("(|R|-2)! exceeds the automorphism enumeration cap");
  }

  AutomorphismGroups g;
  std::vector<std::uint32_t> images = free;
  do {
    std::vector<std::uint32_t> p(n);
    p[r.zero()] = r.zero();
    p[r.one()] = r.one();
    for (std::size_t i = 0; i < free.size(); ++i) p[free[i]] = images[i];
    if (is_semiring_automorphism(r, p)) g.aut.push_back(make_automorphism(r, std::move(p)));
  } while (std::next_permutation(images.begin(), images.end()));
  auto by_perm = [](const SemiringAutomorphism& a, const SemiringAutomorphism& b) {
    return a.permutation < b.permutation;
  };
  std::sort(g.aut.begin(), g.aut.end(), by_perm);

  for (std::uint32_t u = 0; u < n; ++u) {
    bool unit = false;
    for (std::uint32_t w = 0; w < n; ++w) unit = unit || (r.mul(u, w) == r.one() && r.mul(w, u) == r.one());
    if (!unit) continue;
    auto c = conjugation(r, u);
    if (std::find(g.inn.begin(), g.inn.end(), c) == g.inn.end()) g.inn.push_back(std::move(c));
  }
  std::sort(g.inn.begin(), g.inn.end(), by_perm);

  std::vector<bool> covered(g.aut.size(), false);
  for (std::size_t i = 0; i < g.aut.size(); ++i) {
    if (covered[i]) continue;
    g.out_reps.push_back(g.aut[i]);
    for (const auto& inner : g.inn) {
      auto coset_member = compose(r, g.aut[i], inner);
      for (std::size_t j = 0; j < g.aut.size(); ++j)
        if (g.aut[j] == coset_member) covered[j] = true;
    }
  }
  return g;
}

}  // namespace semicat
