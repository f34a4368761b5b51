#pragma once

/**
 * @file normalize.hpp
 * @brief Reading sigma off a functor, fixing injections, and the
 * stable/inner decomposition.
 */

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "semicat/autos/semi_inner.hpp"
#include "semicat/autos/verify.hpp"
#include "semicat/matcat/biproduct.hpp"

namespace semicat {

/**
 * Components t_n : F_n -> F_n (n = 0..cap) of a natural isomorphism between a
 * base functor G and a functor F, in the form F(f) = t_n^-1 ; G(f) ; t_m.
 */
template <SemiringLike S>
struct NaturalIsoWitness {
  std::vector<Iso<S>> family;
  std::string base = "identity";

  const Iso<S>& t(std::size_t n) const { return family.at(n); }
};

/// F(f) == t_n^-1 ; G(f) ; t_m for one morphism between canonical objects.
template <SemiringLike S>
bool natural_at(const NaturalIsoWitness<S>& w, const BlackBoxFunctor<S>& F, const BlackBoxFunctor<S>& G,
                const Morphism<S>& f) {
  auto rhs = compose(w.t(f.rows()).backward, G(f), w.t(f.cols()).forward);
  return detail::same_matrix(F(f), rhs);
}

/// Naturality over all pairs of canonical ranks up to the cap.
template <SemiringLike S>
CheckRecord check_naturality(const NaturalIsoWitness<S>& w, const BlackBoxFunctor<S>& F,
                             const BlackBoxFunctor<S>& G, const VerifyOptions& opt = {},
                             std::string name = "naturality") {
  CheckRecord c{std::move(name)};
  Rng rng(opt.seed);
  const std::size_t cap = std::min(F.cap, w.family.size() - 1);
  for (std::size_t n = 0; n <= cap; ++n)
    for (std::size_t m = 0; m <= cap; ++m) {
      auto st = sweep(F.ring, {Shape{FreeObject::canonical(n), FreeObject::canonical(m)}}, opt.sweep, rng,
                      [&](const std::vector<Morphism<S>>& t) {
                        if (natural_at(w, F, G, t[0])) return true;
                        c.fail({{"f", morphism_to_json(t[0])}}, "naturality square fails");
                        return false;
                      });
      c.absorb(st.regime, st.cases);
    }
  if (c.regime == Regime::sampled) c.seed = opt.seed;
  return c;
}

namespace detail {

template <SemiringLike S>
Morphism<S> scalar(const std::shared_ptr<const S>& ring, const typename S::value_type& v) {
  return Morphism<S>(ring, 1, 1, {v});
}

/// Values to probe a scalar map on: all of a finite carrier, samples otherwise.
template <SemiringLike S>
std::vector<typename S::value_type> probe_values(const S& r, Rng& rng, std::size_t samples) {
  std::vector<typename S::value_type> out;
  if (auto k = r.finite_size()) {
    for (std::size_t i = 0; i < *k; ++i) out.push_back(r.element(i));
  } else {
    out = {r.zero(), r.one()};
    for (std::size_t i = 0; i < samples; ++i) out.push_back(r.sample(rng));
  }
  return out;
}

}  // namespace detail

/// True iff F(mu_i) = mu_i for every injection F_1 -> F_n, n <= cap.
template <SemiringLike S>
std::optional<Morphism<S>> first_moved_injection(const BlackBoxFunctor<S>& F) {
  for (std::size_t n = 1; n <= F.cap; ++n)
    for (std::size_t i = 0; i < n; ++i) {
      auto mu = injection(F.ring, n, i);
      auto img = F(mu);
      if (!detail::same_matrix(img, mu)) return mu;
    }
  return std::nullopt;
}

struct ExtractOptions {
  VerifyOptions verify;
  std::size_t samples = 64;  ///< scalar probes on infinite carriers
};

/**
 * sigma(r) := the entry of F([[r]]). Requires F to fix the canonical
 * injections (InjectionsNotFixed otherwise). The carrier map is checked to be
 * a bijective homomorphism (exhaustively on finite carriers) and F is
 * compared with skew_inner(sigma) on all tested morphisms; failures throw
 * NotAnAutomorphism.
 */
template <SemiringLike S>
ScalarMap<S> extract_sigma(const BlackBoxFunctor<S>& F, const ExtractOptions& opt = {}) {
  using V = typename S::value_type;
  if (auto mu = first_moved_injection(F))
    throw InjectionsNotFixed("functor moves injection " + render_literal(*mu));
  const auto ring = F.ring;
  const S& r = *ring;
  auto sigma_of = [F, ring](const V& v) { return F(detail::scalar(ring, v)).at(0, 0); };
  Rng rng(opt.verify.seed);
  const auto probes = detail::probe_values(r, rng, opt.samples);
  std::vector<V> images;
  for (const auto& v : probes) images.push_back(sigma_of(v));
  auto fail = [&](const std::string& why) { throw NotAnAutomorphism("extracted carrier map: " + why); };
  if (!r.equal(sigma_of(r.zero()), r.zero())) fail("0 not fixed");
  if (!r.equal(sigma_of(r.one()), r.one())) fail("1 not fixed");
  for (std::size_t i = 0; i < probes.size(); ++i)
    for (std::size_t j = 0; j < probes.size(); ++j) {
      if (!r.equal(sigma_of(r.add(probes[i], probes[j])), r.add(images[i], images[j])))
        fail("not additive at (" + r.render(probes[i]) + ", " + r.render(probes[j]) + ")");
      if (!r.equal(sigma_of(r.mul(probes[i], probes[j])), r.mul(images[i], images[j])))
        fail("not multiplicative at (" + r.render(probes[i]) + ", " + r.render(probes[j]) + ")");
      if (r.finite_size() && i < j && r.equal(images[i], images[j]))
        fail("not injective at (" + r.render(probes[i]) + ", " + r.render(probes[j]) + ")");
    }
  ScalarMap<S> sigma;
  sigma.name = "extracted(" + F.name + ")";
  sigma.apply = sigma_of;
  if (r.finite_size()) {
    // Finite and injective, hence bijective: tabulate the inverse.
    std::vector<std::pair<V, V>> inverse_table;
    for (std::size_t i = 0; i < probes.size(); ++i) inverse_table.emplace_back(images[i], probes[i]);
    sigma.apply_inverse = [inverse_table, ring](const V& v) {
      for (const auto& [img, pre] : inverse_table)
        if (ring->equal(img, v)) return pre;
      throw NotAnAutomorphism("value outside the carrier");
    };
  } else {
    sigma.apply_inverse = [](const V&) -> V {
      throw UnsupportedCarrier("inverse of an extracted map on an infinite carrier");
    };
  }
  auto skew = semi_inner_functor(skew_inner_functor(ring, sigma, F.cap));
  auto agreement = check_naturality(NaturalIsoWitness<S>{skew_inner_functor(ring, ScalarMap<S>{}, F.cap).family},
                                    F, skew, opt.verify, "agrees-with-skew-inner");
  if (!agreement.passed)
    throw NotAnAutomorphism("functor differs from skew-inner(sigma) at " + agreement.witness.dump());
  return sigma;
}

/// Finite-carrier convenience returning the tabulated automorphism.
inline SemiringAutomorphism extract_sigma_automorphism(const BlackBoxFunctor<Semiring>& F,
                                                       const ExtractOptions& opt = {}) {
  return to_automorphism(*F.ring, extract_sigma(F, opt));
}

template <SemiringLike S>
struct Normalized {
  BlackBoxFunctor<S> f0;
  NaturalIsoWitness<S> iso;  ///< F(f) = U_n^-1 ; F0(f) ; U_m
};

/**
 * U_n := matrix whose i-th row is F(mu_i). F0(A) = U_n ; F(A) ; U_m^-1 fixes
 * all injections. The inverse of U_n is first tried as the matrix with
 * columns F(pi_j), then searched; NonInvertibleStack if none exists.
 */
template <SemiringLike S>
Normalized<S> normalize_injections(const BlackBoxFunctor<S>& F, std::uint64_t invert_cap = default_invert_cap) {
  const auto& ring = F.ring;
  NaturalIsoWitness<S> iso;
  iso.base = "normalized(" + F.name + ")";
  for (std::size_t n = 0; n <= F.cap; ++n) {
    std::vector<typename S::value_type> rows, cols(n * n, ring->zero());
    for (std::size_t i = 0; i < n; ++i) {
      auto img = F(injection(ring, n, i));
      if (img.rows() != 1 || img.cols() != n) throw NonInvertibleStack("F(mu_i) has the wrong shape at rank " + std::to_string(n));
      rows.insert(rows.end(), img.entries().begin(), img.entries().end());
      auto p = F(projection(ring, n, i));
      if (p.rows() != n || p.cols() != 1) throw NonInvertibleStack("F(pi_i) has the wrong shape at rank " + std::to_string(n));
      for (std::size_t k = 0; k < n; ++k) cols[k * n + i] = p.at(k, 0);
    }
    Morphism<S> u(ring, n, n, std::move(rows));
    Morphism<S> v(ring, n, n, std::move(cols));
    if (!are_inverse(u, v)) {
      std::optional<Morphism<S>> inv;
      try {
        inv = invert(u, invert_cap);
      } catch (const SearchCapExceeded& e) {
        throw NonInvertibleStack("U_" + std::to_string(n) + ": " + e.what());
      }
      if (!inv) throw NonInvertibleStack("U_" + std::to_string(n) + " = stacked F(mu_i) has no inverse");
      v = *inv;
    }
    iso.family.push_back(Iso<S>{u, v});
  }
  BlackBoxFunctor<S> f0;
  f0.name = "normalized(" + F.name + ")";
  f0.ring = ring;
  f0.cap = F.cap;
  f0.on_morphisms = [F, iso](const Morphism<S>& f) {
    return compose(iso.t(f.rows()).forward, F(f), iso.t(f.cols()).backward).relabeled(f.dom(), f.cod());
  };
  return {std::move(f0), std::move(iso)};
}

template <SemiringLike S>
struct StableInner {
  BlackBoxFunctor<S> stable;  ///< object-fixing
  BlackBoxFunctor<S> inner;   ///< conjugation by the isos; stable then inner equals F
};

/**
 * With isos i_A : A -> F(A) (given as A -> F_rank(A)):
 *   F_S(f) = i_A ; F(f) ; i_B^-1  (object-fixing)
 *   F_I(g) = i_A^-1 ; g ; i_B      (object action of F)
 * so F_I(F_S(f)) = F(f). Throws MissingIso for uncovered objects.
 */
template <SemiringLike S>
StableInner<S> decompose_stable_inner(const BlackBoxFunctor<S>& F, const IsoFamily<S>& isos) {
  for (const auto& a : F.objects())
    if (!isos.covers(a)) throw MissingIso("no isomorphism supplied for object " + a.label);
  auto to_image = [F, isos](const FreeObject& a) {
    auto i = isos.at(a);
    const auto fa = F.object(a);
    return Iso<S>{i.forward.relabeled(a, fa), i.backward.relabeled(fa, a)};
  };
  StableInner<S> out;
  out.stable.name = "stable(" + F.name + ")";
  out.stable.ring = F.ring;
  out.stable.cap = F.cap;
  out.stable.extra_objects = F.extra_objects;
  out.stable.on_morphisms = [F, to_image](const Morphism<S>& f) {
    auto ia = to_image(f.dom()), ib = to_image(f.cod());
    return compose(ia.forward, F(f), ib.backward);
  };
  out.inner.name = "inner(" + F.name + ")";
  out.inner.ring = F.ring;
  out.inner.cap = F.cap;
  out.inner.extra_objects = F.extra_objects;
  out.inner.on_objects = [F](const FreeObject& a) { return F.object(a); };
  out.inner.on_morphisms = [to_image](const Morphism<S>& g) {
    auto ia = to_image(g.dom()), ib = to_image(g.cod());
    return compose(ia.backward, g, ib.forward);
  };
  return out;
}

}  // namespace semicat
