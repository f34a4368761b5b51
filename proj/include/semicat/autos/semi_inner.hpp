#pragma once

/**
 * @file semi_inner.hpp
 * @brief Skew-inner and semi-inner automorphisms of the matrix category.
 *
 * Semi-inner data (sigma, {T_n}) acts by A -> T_n^-1 * sigma(A) * T_m for
 * A : F_n -> F_m, sigma applied entrywise. The underlying sigma-semilinear
 * bijections are s_n(a) = sigma(a) * T_n on row vectors.
 */

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "semicat/error.hpp"
#include "semicat/matcat/functor.hpp"
#include "semicat/matcat/invert.hpp"
#include "semicat/semiring/automorphisms.hpp"

namespace semicat {

/// A carrier automorphism given by its action and inverse action.
template <SemiringLike S>
struct ScalarMap {
  using value_type = typename S::value_type;
  std::string name = "identity";
  std::function<value_type(const value_type&)> apply;
  std::function<value_type(const value_type&)> apply_inverse;

  value_type operator()(const value_type& v) const { return apply ? apply(v) : v; }
  value_type inverse(const value_type& v) const { return apply_inverse ? apply_inverse(v) : v; }
};

inline ScalarMap<Semiring> scalar_map(const SemiringAutomorphism& a) {
  return {a.name, [a](const SemiringValue& v) { return a.apply(v); },
          [a](const SemiringValue& v) { return a.apply_inverse(v); }};
}

/// Tabulates a ScalarMap on a finite carrier.
inline SemiringAutomorphism to_automorphism(const Semiring& r, const ScalarMap<Semiring>& m) {
  std::vector<std::uint32_t> p(r.table().size());
  for (std::uint32_t i = 0; i < p.size(); ++i) p[i] = std::get<FiniteElement>(m(r.element(i))).index;
  if (!is_semiring_automorphism(r.table(), p)) throw NotAnAutomorphism("map is not a semiring automorphism");
  return make_automorphism(r.table(), std::move(p));
}

template <SemiringLike S>
ScalarMap<S> then(const ScalarMap<S>& first, const ScalarMap<S>& second) {
  return {first.name + ";" + second.name,
          [first, second](const typename S::value_type& v) { return second(first(v)); },
          [first, second](const typename S::value_type& v) { return first.inverse(second.inverse(v)); }};
}

template <SemiringLike S>
ScalarMap<S> inverse_map(const ScalarMap<S>& m) {
  return {m.name + "^-1", [m](const typename S::value_type& v) { return m.inverse(v); },
          [m](const typename S::value_type& v) { return m(v); }};
}

template <SemiringLike S>
Morphism<S> apply_entrywise(const ScalarMap<S>& sigma, const Morphism<S>& f) {
  return map_entries(f, [&](const typename S::value_type& v) { return sigma(v); });
}

template <SemiringLike S>
struct SemiInnerData {
  std::shared_ptr<const S> ring;
  ScalarMap<S> sigma;
  std::vector<Iso<S>> family;  ///< T_n for n = 0..cap
  std::size_t cap = 2;

  const Iso<S>& t(std::size_t n) const {
    if (n > cap) throw IndexOutOfRange("rank " + std::to_string(n) + " exceeds the cap");
    return family.at(n);
  }
};

/**
 * Builds data from sigma and T_1..T_cap (index 0 of `t` is F_0 and may be
 * omitted). Missing ranks default to identities; each T_n is inverted and the
 * inverse verified. Throws NonInvertibleFamily otherwise.
 */
template <SemiringLike S>
SemiInnerData<S> make_semi_inner_data(std::shared_ptr<const S> ring, ScalarMap<S> sigma,
                                      const std::map<std::size_t, Morphism<S>>& t, std::size_t cap,
                                      std::uint64_t invert_cap = default_invert_cap) {
  SemiInnerData<S> d{ring, std::move(sigma), {}, cap};
  for (std::size_t n = 0; n <= cap; ++n) {
    auto it = t.find(n);
    if (it == t.end()) {
      d.family.push_back(Iso<S>{identity(ring, n), identity(ring, n)});
      continue;
    }
    if (it->second.rows() != n || it->second.cols() != n)
      throw DimensionMismatch("T_" + std::to_string(n) + " must be " + std::to_string(n) + "x" + std::to_string(n));
    std::optional<Morphism<S>> inv;
    try {
      inv = invert(it->second, invert_cap);
    } catch (const SearchCapExceeded& e) {
      throw NonInvertibleFamily(std::string("T_") + std::to_string(n) + ": " + e.what());
    }
    if (!inv) throw NonInvertibleFamily("T_" + std::to_string(n) + " has no inverse");
    d.family.push_back(Iso<S>{it->second, *inv});
  }
  return d;
}

/// Same, with explicitly supplied inverses (needed over infinite carriers).
template <SemiringLike S>
SemiInnerData<S> make_semi_inner_data(std::shared_ptr<const S> ring, ScalarMap<S> sigma,
                                      const std::map<std::size_t, Iso<S>>& t, std::size_t cap) {
  SemiInnerData<S> d{ring, std::move(sigma), {}, cap};
  for (std::size_t n = 0; n <= cap; ++n) {
    auto it = t.find(n);
    if (it == t.end()) {
      d.family.push_back(Iso<S>{identity(ring, n), identity(ring, n)});
    } else {
      if (!are_inverse(it->second.forward, it->second.backward))
        throw NonInvertibleFamily("T_" + std::to_string(n) + ": supplied inverse does not verify");
      d.family.push_back(it->second);
    }
  }
  return d;
}

/// sigma with identity family.
template <SemiringLike S>
SemiInnerData<S> skew_inner_functor(std::shared_ptr<const S> ring, ScalarMap<S> sigma, std::size_t cap) {
  return make_semi_inner_data(std::move(ring), std::move(sigma), std::map<std::size_t, Iso<S>>{}, cap);
}

inline SemiInnerData<Semiring> skew_inner_functor(const SemiringPtr& ring, const SemiringAutomorphism& sigma,
                                                  std::size_t cap) {
  return skew_inner_functor(ring, scalar_map(sigma), cap);
}

/// Identity sigma: conjugation A -> T_n^-1 A T_m.
template <SemiringLike S>
SemiInnerData<S> inner_functor_data(std::shared_ptr<const S> ring, const std::map<std::size_t, Morphism<S>>& t,
                                    std::size_t cap) {
  return make_semi_inner_data(std::move(ring), ScalarMap<S>{}, t, cap);
}

template <SemiringLike S>
Morphism<S> semi_inner_apply(const SemiInnerData<S>& d, const Morphism<S>& f) {
  const auto& tn = d.t(f.rows());
  const auto& tm = d.t(f.cols());
  auto image = compose(tn.backward, apply_entrywise(d.sigma, f), tm.forward);
  return image.relabeled(f.dom(), f.cod());
}

template <SemiringLike S>
BlackBoxFunctor<S> semi_inner_functor(const SemiInnerData<S>& d) {
  for (std::size_t n = 0; n <= d.cap; ++n)
    if (!are_inverse(d.t(n).forward, d.t(n).backward))
      throw NonInvertibleFamily("T_" + std::to_string(n) + " lacks a verified inverse");
  BlackBoxFunctor<S> f;
  f.name = "semi-inner(" + d.sigma.name + ")";
  f.ring = d.ring;
  f.cap = d.cap;
  f.on_morphisms = [d](const Morphism<S>& m) { return semi_inner_apply(d, m); };
  return f;
}

/// s_n(a) = sigma(a) * T_n for a row vector a : F_1 -> F_n.
template <SemiringLike S>
Morphism<S> semilinear_map(const SemiInnerData<S>& d, const Morphism<S>& a) {
  return compose(apply_entrywise(d.sigma, a), d.t(a.cols()).forward);
}

/// Checks s_m(a * A) = s_n(a) * phi(A) for one vector a and morphism A.
template <SemiringLike S>
bool semi_inner_square_commutes(const SemiInnerData<S>& d, const Morphism<S>& a, const Morphism<S>& f) {
  auto lhs = semilinear_map(d, compose(a, f));
  auto rhs = compose(semilinear_map(d, a), semi_inner_apply(d, f));
  return lhs == rhs;
}

/**
 * Data for "a then b": sigma = sigma_b after sigma_a, T_n = sigma_b(Ta_n) * Tb_n.
 * Throws CapMismatch or SemiringMismatch.
 */
template <SemiringLike S>
SemiInnerData<S> compose_semi_inner(const SemiInnerData<S>& a, const SemiInnerData<S>& b) {
  if (a.cap != b.cap) throw CapMismatch("semi-inner data with caps " + std::to_string(a.cap) + " and " + std::to_string(b.cap));
  if (a.ring != b.ring && a.ring->name() != b.ring->name())
    throw SemiringMismatch("semi-inner data over different semirings");
  SemiInnerData<S> c{a.ring, then(a.sigma, b.sigma), {}, a.cap};
  for (std::size_t n = 0; n <= a.cap; ++n) {
    auto fwd = compose(apply_entrywise(b.sigma, a.t(n).forward), b.t(n).forward);
    auto back = compose(b.t(n).backward, apply_entrywise(b.sigma, a.t(n).backward));
    c.family.push_back(Iso<S>{fwd, back});
  }
  return c;
}

}  // namespace semicat
