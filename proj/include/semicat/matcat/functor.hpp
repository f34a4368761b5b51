#pragma once

/**
 * @file functor.hpp
 * @brief Opaque endofunctors on the rank-truncated matrix category.
 */

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "semicat/matcat/morphism.hpp"

namespace semicat {

/**
 * Object and morphism actions supplied as callables. Nothing is checked at
 * construction; see verify_functor. The callables must be pure.
 */
template <SemiringLike S>
struct BlackBoxFunctor {
  std::string name;
  std::shared_ptr<const S> ring;
  std::size_t cap = 2;
  /// Empty means identity on objects.
  std::function<FreeObject(const FreeObject&)> on_objects;
  std::function<Morphism<S>(const Morphism<S>&)> on_morphisms;
  /// Labeled objects in play besides the canonical F_0 .. F_cap.
  std::vector<FreeObject> extra_objects;

  FreeObject object(const FreeObject& a) const { return on_objects ? on_objects(a) : a; }
  Morphism<S> operator()(const Morphism<S>& f) const { return on_morphisms(f); }

  std::vector<FreeObject> objects() const {
    std::vector<FreeObject> out;
    for (std::size_t n = 0; n <= cap; ++n) out.push_back(FreeObject::canonical(n));
    out.insert(out.end(), extra_objects.begin(), extra_objects.end());
    return out;
  }
};

template <SemiringLike S>
BlackBoxFunctor<S> identity_functor(std::shared_ptr<const S> ring, std::size_t cap) {
  return {"identity", std::move(ring), cap, {}, [](const Morphism<S>& f) { return f; }, {}};
}

/// "first then second": f -> second(first(f)).
template <SemiringLike S>
BlackBoxFunctor<S> functor_then(const BlackBoxFunctor<S>& first, const BlackBoxFunctor<S>& second) {
  BlackBoxFunctor<S> h;
  h.name = first.name + ";" + second.name;
  h.ring = first.ring;
  h.cap = std::min(first.cap, second.cap);
  h.on_objects = [first, second](const FreeObject& a) { return second.object(first.object(a)); };
  h.on_morphisms = [first, second](const Morphism<S>& f) { return second(first(f)); };
  h.extra_objects = first.extra_objects;
  return h;
}

}  // namespace semicat
