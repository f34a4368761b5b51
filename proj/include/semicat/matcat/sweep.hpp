#pragma once

/**
 * @file sweep.hpp
 * @brief Visiting tuples of morphisms: every tuple when the space fits the
 * budget, seeded samples otherwise.
 */

#include <utility>
#include <vector>

#include "semicat/matcat/morphism.hpp"
#include "semicat/report/check.hpp"

namespace semicat {

struct SweepOptions {
  std::uint64_t budget = 65536;  ///< largest tuple space enumerated exhaustively
  std::uint64_t samples = 256;   ///< tuples drawn when sampling
};

using Shape = std::pair<FreeObject, FreeObject>;

struct SweepStats {
  Regime regime = Regime::exhaustive;
  std::uint64_t cases = 0;
};

/// Number of tuples of the given shapes, if finite and representable.
template <SemiringLike S>
std::optional<std::uint64_t> tuple_space(const S& r, const std::vector<Shape>& shapes) {
  std::uint64_t total = 1;
  for (const auto& [a, b] : shapes) {
    auto k = hom_set_size(r, a.rank, b.rank);
    if (!k || (*k != 0 && total > UINT64_MAX / *k)) return std::nullopt;
    total *= *k;
  }
  return total;
}

namespace detail {

template <SemiringLike S, class Visit>
bool sweep_all(const std::shared_ptr<const S>& ring, const std::vector<Shape>& shapes,
               std::vector<Morphism<S>>& tuple, std::uint64_t& count, Visit& visit) {
  if (tuple.size() == shapes.size()) {
    ++count;
    return visit(static_cast<const std::vector<Morphism<S>>&>(tuple));
  }
  const auto& [a, b] = shapes[tuple.size()];
  bool go = true;
  for_each_matrix(ring, a, b, [&](const Morphism<S>& f) {
    tuple.push_back(f);
    go = sweep_all(ring, shapes, tuple, count, visit);
    tuple.pop_back();
    return go;
  });
  return go;
}

}  // namespace detail

/**
 * visit(tuple) returns false to stop. Exhaustive when the tuple space is at
 * most opt.budget, otherwise opt.samples draws from `rng`.
 */
template <SemiringLike S, class Visit>
SweepStats sweep(const std::shared_ptr<const S>& ring, const std::vector<Shape>& shapes,
                 const SweepOptions& opt, Rng& rng, Visit&& visit) {
  SweepStats st;
  auto space = tuple_space(*ring, shapes);
  if (space && *space <= opt.budget) {
    std::vector<Morphism<S>> tuple;
    tuple.reserve(shapes.size());
    detail::sweep_all(ring, shapes, tuple, st.cases, visit);
    return st;
  }
  st.regime = Regime::sampled;
  for (std::uint64_t i = 0; i < opt.samples; ++i) {
    std::vector<Morphism<S>> tuple;
    for (const auto& [a, b] : shapes) tuple.push_back(sample_morphism(ring, a, b, rng));
    ++st.cases;
    if (!visit(static_cast<const std::vector<Morphism<S>>&>(tuple))) break;
  }
  return st;
}

}  // namespace semicat
