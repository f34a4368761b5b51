#pragma once

/**
 * @file transport.hpp
 * @brief Extending an object-fixing functor on the skeleton to labeled objects.
 */

#include "semicat/matcat/functor.hpp"
#include "semicat/matcat/invert.hpp"

namespace semicat {

/**
 * Given phi_bar on canonical objects and isos i_A : A -> F_n, returns the
 * object-fixing functor
 *   f : A -> B  |->  i_A ; phi_bar(i_A^-1 ; f ; i_B) ; i_B^-1.
 * Throws MissingIso when an endpoint has no iso.
 */
template <SemiringLike S>
BlackBoxFunctor<S> skeleton_transport(const BlackBoxFunctor<S>& phi_bar, const IsoFamily<S>& isos) {
  BlackBoxFunctor<S> ext;
  ext.name = phi_bar.name + "^i";
  ext.ring = phi_bar.ring;
  ext.cap = phi_bar.cap;
  ext.extra_objects = isos.objects();
  ext.on_morphisms = [phi_bar, isos](const Morphism<S>& f) {
    const auto ia = isos.at(f.dom());
    const auto ib = isos.at(f.cod());
    const auto inner = compose(ia.backward, f, ib.forward);
    const auto image = phi_bar(inner);
    return compose(ia.forward, image, ib.backward);
  };
  return ext;
}

/**
 * Components eta_A = i_A ; phi(i_A^-1) : A -> A of the natural isomorphism
 * from skeleton_transport(phi restricted to the skeleton) to phi.
 */
template <SemiringLike S>
Morphism<S> transport_iso_component(const BlackBoxFunctor<S>& phi, const IsoFamily<S>& isos,
                                    const FreeObject& a) {
  const auto ia = isos.at(a);
  return compose(ia.forward, phi(ia.backward));
}

}  // namespace semicat
