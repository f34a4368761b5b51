#pragma once

/**
 * @file axioms.hpp
 * @brief Axiom checks over any SemiringLike carrier.
 *
 * Finite carriers are checked exhaustively through validate_semiring; for the
 * infinite built-ins the same eight axioms are checked on seeded samples.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semicat/error.hpp"
#include "semicat/semiring/concepts.hpp"
#include "semicat/semiring/finite_semiring.hpp"

namespace semicat {

struct SampledAxiomFailure {
  std::string axiom;
  std::vector<std::string> witness;  ///< rendered values
};

/// First axiom failing on `samples` random triples (plus 0 and 1 in every slot).
template <SemiringLike S>
std::optional<SampledAxiomFailure> sampled_axiom_failure(const S& r, Rng& rng,
                                                         std::size_t samples) {
  using V = typename S::value_type;
  std::vector<V> pool{r.zero(), r.one()};
  for (std::size_t i = 0; i < samples; ++i) pool.push_back(r.sample(rng));
  auto eq = [&](const V& a, const V& b) { return r.equal(a, b); };
  auto fail = [&](const char* ax, std::initializer_list<V> w) {
    SampledAxiomFailure f{ax, {}};
    for (const auto& v : w) f.witness.push_back(r.render(v));
    return f;
  };
  const std::size_t n = pool.size();
  for (std::size_t k = 0; k < n; ++k) {
    const V& a = pool[k];
    const V& b = pool[(k * 7 + 1) % n];
    const V& c = pool[(k * 13 + 5) % n];
    if (!eq(r.add(r.add(a, b), c), r.add(a, r.add(b, c))))
      return fail(axiom::additive_associativity, {a, b, c});
    if (!eq(r.add(a, b), r.add(b, a))) return fail(axiom::additive_commutativity, {a, b});
    if (!eq(r.add(a, r.zero()), a)) return fail(axiom::zero_identity, {a});
    if (!eq(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c))))
      return fail(axiom::multiplicative_associativity, {a, b, c});
    if (!eq(r.mul(a, r.one()), a) || !eq(r.mul(r.one(), a), a))
      return fail(axiom::one_identity, {a});
    if (!eq(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c))))
      return fail(axiom::left_distributivity, {a, b, c});
    if (!eq(r.mul(r.add(a, b), c), r.add(r.mul(a, c), r.mul(b, c))))
      return fail(axiom::right_distributivity, {a, b, c});
    if (!eq(r.mul(r.zero(), a), r.zero()) || !eq(r.mul(a, r.zero()), r.zero()))
      return fail(axiom::zero_annihilation, {a});
  }
  return std::nullopt;
}

}  // namespace semicat
