#pragma once

#include <cstdint>
#include <random>

namespace semicat {

/// The single generator type threaded through every sampled check.
using Rng = std::mt19937_64;

/// Uniform index in [0, n). Uses modulo so results are identical on every
/// standard library (std::uniform_int_distribution is implementation-defined).
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return n == 0 ? 0 : static_cast<std::size_t>(rng() % n);
}

}  // namespace semicat
