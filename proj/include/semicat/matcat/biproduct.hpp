#pragma once

/**
 * @file biproduct.hpp
 * @brief Injections, projections and the codiagonal of F_n.
 */

#include <vector>

#include "semicat/error.hpp"
#include "semicat/matcat/morphism.hpp"

namespace semicat {

template <SemiringLike S>
struct BiproductSystem {
  std::size_t rank = 0;
  std::vector<Morphism<S>> injections;   ///< mu_i : F_1 -> F_n, unit rows
  std::vector<Morphism<S>> projections;  ///< pi_i : F_n -> F_1, unit columns
  Morphism<S> codiagonal;                ///< nu_0 : F_n -> F_1, all ones
};

template <SemiringLike S>
Morphism<S> injection(const std::shared_ptr<const S>& ring, std::size_t n, std::size_t i) {
  std::vector<typename S::value_type> e(n, ring->zero());
  e.at(i) = ring->one();
  return Morphism<S>(ring, 1, n, std::move(e));
}

template <SemiringLike S>
Morphism<S> projection(const std::shared_ptr<const S>& ring, std::size_t n, std::size_t i) {
  std::vector<typename S::value_type> e(n, ring->zero());
  e.at(i) = ring->one();
  return Morphism<S>(ring, n, 1, std::move(e));
}

template <SemiringLike S>
Morphism<S> codiagonal(const std::shared_ptr<const S>& ring, std::size_t n) {
  return Morphism<S>(ring, n, 1, std::vector<typename S::value_type>(n, ring->one()));
}

/// Builds the system for F_n and checks its four defining equations.
template <SemiringLike S>
BiproductSystem<S> biproduct_system(const std::shared_ptr<const S>& ring, std::size_t n) {
  if (n == 0) throw ZeroRank("F0 has an empty biproduct system");
  BiproductSystem<S> b{n, {}, {}, codiagonal(ring, n)};
  for (std::size_t i = 0; i < n; ++i) {
    b.injections.push_back(injection(ring, n, i));
    b.projections.push_back(projection(ring, n, i));
  }
  auto sum = zero_morphism(ring, FreeObject::canonical(n), FreeObject::canonical(n));
  for (std::size_t i = 0; i < n; ++i)
    sum = add_morphisms(sum, compose(b.projections[i], b.injections[i]));
  if (!(sum == identity(ring, n))) throw Error("biproduct: sum of pi_i;mu_i is not the identity");
  const auto id1 = identity(ring, 1);
  const auto zero1 = zero_morphism(ring, FreeObject::canonical(1), FreeObject::canonical(1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (!(compose(b.injections[i], b.projections[j]) == (i == j ? id1 : zero1)))
        throw Error("biproduct: mu_i;pi_j is wrong");
    if (!(compose(b.injections[i], b.codiagonal) == id1)) throw Error("biproduct: mu_i;nu_0 is not 1");
  }
  return b;
}

}  // namespace semicat
