#pragma once

/**
 * @file morphism.hpp
 * @brief Free objects and matrix morphisms between them.
 *
 * A morphism F_n -> F_m is an n x m matrix; elements of F_n are row vectors
 * acting by a -> a*A. Composition is diagrammatic: compose(f, g) is "f then g"
 * and has matrix A_f * A_g.
 */

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semicat/error.hpp"
#include "semicat/semiring/concepts.hpp"

namespace semicat {

struct FreeObject {
  std::string label;
  std::size_t rank = 0;

  static FreeObject canonical(std::size_t n) { return {"F" + std::to_string(n), n}; }
  bool is_canonical() const { return label == "F" + std::to_string(rank); }

  friend bool operator==(const FreeObject&, const FreeObject&) = default;
  friend auto operator<=>(const FreeObject&, const FreeObject&) = default;
};

template <SemiringLike S>
class Morphism {
 public:
  using semiring_type = S;
  using value_type = typename S::value_type;
  using ring_ptr = std::shared_ptr<const S>;

  Morphism(ring_ptr ring, FreeObject dom, FreeObject cod, std::vector<value_type> entries)
      : ring_(std::move(ring)), dom_(std::move(dom)), cod_(std::move(cod)), entries_(std::move(entries)) {
    if (entries_.size() != dom_.rank * cod_.rank)
      throw DimensionMismatch("morphism " + dom_.label + " -> " + cod_.label + " needs " +
                              std::to_string(dom_.rank * cod_.rank) + " entries, got " +
                              std::to_string(entries_.size()));
  }

  /// Canonical F_n -> F_m from row-major entries.
  Morphism(ring_ptr ring, std::size_t n, std::size_t m, std::vector<value_type> entries)
      : Morphism(std::move(ring), FreeObject::canonical(n), FreeObject::canonical(m),
                 std::move(entries)) {}

  const ring_ptr& ring() const noexcept { return ring_; }
  const S& semiring() const noexcept { return *ring_; }
  const FreeObject& dom() const noexcept { return dom_; }
  const FreeObject& cod() const noexcept { return cod_; }
  std::size_t rows() const noexcept { return dom_.rank; }
  std::size_t cols() const noexcept { return cod_.rank; }
  const std::vector<value_type>& entries() const noexcept { return entries_; }
  const value_type& at(std::size_t i, std::size_t j) const { return entries_.at(i * cols() + j); }
  value_type& at(std::size_t i, std::size_t j) { return entries_.at(i * cols() + j); }

  /// Same matrix with new endpoint labels (ranks must agree).
  Morphism relabeled(FreeObject dom, FreeObject cod) const {
    if (dom.rank != dom_.rank || cod.rank != cod_.rank)
      throw DimensionMismatch("relabeling must keep ranks");
    return Morphism(ring_, std::move(dom), std::move(cod), entries_);
  }

  friend bool operator==(const Morphism& a, const Morphism& b) {
    if (a.dom_ != b.dom_ || a.cod_ != b.cod_) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
      if (!a.ring_->equal(a.entries_[i], b.entries_[i])) return false;
    return true;
  }

 private:
  ring_ptr ring_;
  FreeObject dom_;
  FreeObject cod_;
  std::vector<value_type> entries_;
};

namespace detail {

template <SemiringLike S>
void require_same_ring(const Morphism<S>& f, const Morphism<S>& g) {
  if (f.ring() != g.ring() && f.semiring().name() != g.semiring().name())
    throw SemiringMismatch("morphisms over " + std::string(f.semiring().name()) + " and " +
                           std::string(g.semiring().name()));
}

}  // namespace detail

template <SemiringLike S>
Morphism<S> identity(std::shared_ptr<const S> ring, const FreeObject& a) {
  std::vector<typename S::value_type> e(a.rank * a.rank, ring->zero());
  for (std::size_t i = 0; i < a.rank; ++i) e[i * a.rank + i] = ring->one();
  return Morphism<S>(std::move(ring), a, a, std::move(e));
}

template <SemiringLike S>
Morphism<S> identity(std::shared_ptr<const S> ring, std::size_t n) {
  return identity(std::move(ring), FreeObject::canonical(n));
}

template <SemiringLike S>
Morphism<S> zero_morphism(std::shared_ptr<const S> ring, const FreeObject& a, const FreeObject& b) {
  std::vector<typename S::value_type> e(a.rank * b.rank, ring->zero());
  return Morphism<S>(std::move(ring), a, b, std::move(e));
}

/// "f then g": matrix product A_f * A_g.
template <SemiringLike S>
Morphism<S> compose(const Morphism<S>& f, const Morphism<S>& g) {
  detail::require_same_ring(f, g);
  if (f.cols() != g.rows())
    throw DimensionMismatch("cannot compose " + f.dom().label + "->" + f.cod().label + " with " +
                            g.dom().label + "->" + g.cod().label);
  const S& r = f.semiring();
  const std::size_t n = f.rows(), m = f.cols(), k = g.cols();
  std::vector<typename S::value_type> e(n * k, r.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto acc = r.zero();
      for (std::size_t t = 0; t < m; ++t) acc = r.add(acc, r.mul(f.at(i, t), g.at(t, j)));
      e[i * k + j] = std::move(acc);
    }
  return Morphism<S>(f.ring(), f.dom(), g.cod(), std::move(e));
}

template <SemiringLike S, class... Rest>
Morphism<S> compose(const Morphism<S>& f, const Morphism<S>& g, const Rest&... rest) {
  return compose(compose(f, g), rest...);
}

template <SemiringLike S>
Morphism<S> add_morphisms(const Morphism<S>& f, const Morphism<S>& g) {
  detail::require_same_ring(f, g);
  if (f.rows() != g.rows() || f.cols() != g.cols())
    throw DimensionMismatch("cannot add morphisms of different shapes");
  const S& r = f.semiring();
  std::vector<typename S::value_type> e;
  e.reserve(f.entries().size());
  for (std::size_t i = 0; i < f.entries().size(); ++i) e.push_back(r.add(f.entries()[i], g.entries()[i]));
  return Morphism<S>(f.ring(), f.dom(), f.cod(), std::move(e));
}

/// Applies `fn` to every entry, keeping the endpoints.
template <SemiringLike S, class Fn>
Morphism<S> map_entries(const Morphism<S>& f, Fn&& fn) {
  std::vector<typename S::value_type> e;
  e.reserve(f.entries().size());
  for (const auto& v : f.entries()) e.push_back(fn(v));
  return Morphism<S>(f.ring(), f.dom(), f.cod(), std::move(e));
}

/// |R|^(n*m) if it fits in 64 bits and R is finite.
template <SemiringLike S>
std::optional<std::uint64_t> hom_set_size(const S& r, std::size_t n, std::size_t m) {
  auto k = r.finite_size();
  if (!k) return std::nullopt;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * m; ++i) {
    if (total > UINT64_MAX / *k) return std::nullopt;
    total *= *k;
  }
  return total;
}

/**
 * Calls visit(f) for every a -> b matrix over a finite carrier, in
 * lexicographic order of row-major entry indices. Stops early if visit
 * returns false. Returns the number of matrices visited.
 */
template <SemiringLike S, class Visit>
std::uint64_t for_each_matrix(const std::shared_ptr<const S>& ring, const FreeObject& a,
                              const FreeObject& b, Visit&& visit) {
  const auto k = ring->finite_size();
  if (!k) throw UnsupportedCarrier(std::string(ring->name()) + " cannot be enumerated");
  const std::size_t cells = a.rank * b.rank;
  std::vector<std::size_t> digits(cells, 0);
  std::vector<typename S::value_type> elems;
  for (std::size_t i = 0; i < *k; ++i) elems.push_back(ring->element(i));
  std::uint64_t visited = 0;
  while (true) {
    std::vector<typename S::value_type> e;
    e.reserve(cells);
    for (auto d : digits) e.push_back(elems[d]);
    ++visited;
    if (!visit(Morphism<S>(ring, a, b, std::move(e)))) return visited;
    std::size_t pos = cells;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < *k) break;
      digits[pos] = 0;
      if (pos == 0) return visited;
    }
    if (cells == 0) return visited;
  }
}

template <SemiringLike S>
std::uint64_t for_each_matrix(const std::shared_ptr<const S>& ring, std::size_t n, std::size_t m,
                              auto&& visit) {
  return for_each_matrix(ring, FreeObject::canonical(n), FreeObject::canonical(m), visit);
}

template <SemiringLike S>
Morphism<S> sample_morphism(const std::shared_ptr<const S>& ring, const FreeObject& a,
                            const FreeObject& b, Rng& rng) {
  std::vector<typename S::value_type> e;
  for (std::size_t i = 0; i < a.rank * b.rank; ++i) e.push_back(ring->sample(rng));
  return Morphism<S>(ring, a, b, std::move(e));
}

template <SemiringLike S>
Morphism<S> sample_morphism(const std::shared_ptr<const S>& ring, std::size_t n, std::size_t m,
                            Rng& rng) {
  return sample_morphism(ring, FreeObject::canonical(n), FreeObject::canonical(m), rng);
}

}  // namespace semicat
