#pragma once

/**
 * @file concepts.hpp
 * @brief The interface matrix code needs from a scalar carrier.
 */

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>

#include "semicat/util/random.hpp"

namespace semicat {

template <class S>
concept SemiringLike = requires(const S& s, const typename S::value_type& a, std::size_t i,
                                Rng& rng, const std::string& text) {
  typename S::value_type;
  { s.zero() } -> std::convertible_to<typename S::value_type>;
  { s.one() } -> std::convertible_to<typename S::value_type>;
  { s.add(a, a) } -> std::convertible_to<typename S::value_type>;
  { s.mul(a, a) } -> std::convertible_to<typename S::value_type>;
  { s.equal(a, a) } -> std::convertible_to<bool>;
  { s.finite_size() } -> std::convertible_to<std::optional<std::size_t>>;
  { s.element(i) } -> std::convertible_to<typename S::value_type>;
  { s.sample(rng) } -> std::convertible_to<typename S::value_type>;
  { s.render(a) } -> std::convertible_to<std::string>;
  { s.parse(text) } -> std::convertible_to<typename S::value_type>;
  { s.name() } -> std::convertible_to<std::string>;
};

}  // namespace semicat
