#pragma once

/**
 * @file invert.hpp
 * @brief Two-sided inverses of square matrices and isomorphism families.
 */

#include <map>
#include <optional>
#include <vector>

#include "semicat/error.hpp"
#include "semicat/matcat/morphism.hpp"

namespace semicat {

inline constexpr std::uint64_t default_invert_cap = std::uint64_t{1} << 24;

namespace detail {

/// Monomial matrices (one unit per row and column) invert by transposing and
/// inverting the nonzero entries.
template <SemiringLike S>
std::optional<Morphism<S>> monomial_inverse(const Morphism<S>& f) {
  const S& r = f.semiring();
  if constexpr (requires(const typename S::value_type& v) { r.inverse(v); }) {
    const std::size_t n = f.rows();
    std::vector<typename S::value_type> e(n * n, r.zero());
    std::vector<bool> col_used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < n; ++j) {
        if (r.equal(f.at(i, j), r.zero())) continue;
        if (col) return std::nullopt;
        col = j;
      }
      if (!col || col_used[*col]) return std::nullopt;
      col_used[*col] = true;
      auto inv = r.inverse(f.at(i, *col));
      if (!inv) return std::nullopt;
      e[*col * n + i] = *inv;
    }
    return Morphism<S>(f.ring(), f.cod(), f.dom(), std::move(e));
  } else {
    return std::nullopt;
  }
}

template <SemiringLike S>
bool is_identity_matrix(const Morphism<S>& f) {
  const S& r = f.semiring();
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j)
      if (!r.equal(f.at(i, j), i == j ? r.one() : r.zero())) return false;
  return true;
}

}  // namespace detail

/// True iff f;g and g;f are identities.
template <SemiringLike S>
bool are_inverse(const Morphism<S>& f, const Morphism<S>& g) {
  if (f.rows() != g.cols() || f.cols() != g.rows()) return false;
  return detail::is_identity_matrix(compose(f, g)) && detail::is_identity_matrix(compose(g, f));
}

/**
 * Two-sided inverse of a square morphism, or nullopt if none exists.
 *
 * Tries the monomial fast path, then searches finite carriers exhaustively:
 * each column of a right inverse is found among the |R|^n vectors, and the
 * combinations are checked as left inverses. Throws SearchCapExceeded when the
 * nominal space |R|^(n^2) exceeds `cap` (or the carrier is infinite) and the
 * fast path failed.
 */
template <SemiringLike S>
std::optional<Morphism<S>> invert(const Morphism<S>& f, std::uint64_t cap = default_invert_cap) {
  if (f.rows() != f.cols()) throw DimensionMismatch("only square morphisms can be inverted");
  if (auto g = detail::monomial_inverse(f); g && are_inverse(f, *g)) return g;
  const std::size_t n = f.rows();
  auto space = hom_set_size(f.semiring(), n, n);
  if (!space || *space > cap)
    throw SearchCapExceeded("inverse search over " + std::string(f.semiring().name()) +
                            " at rank " + std::to_string(n) + " exceeds the cap");
  const S& r = f.semiring();
  const auto& ring = f.ring();
  // Column candidates: vectors b with A*b = e_j.
  std::vector<std::vector<std::vector<typename S::value_type>>> candidates(n);
  for_each_matrix(ring, FreeObject::canonical(n), FreeObject::canonical(1), [&](const Morphism<S>& b) {
    auto col = compose(f, b);
    for (std::size_t j = 0; j < n; ++j) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) ok = r.equal(col.at(i, 0), i == j ? r.one() : r.zero());
      if (ok) candidates[j].push_back(b.entries());
    }
    return true;
  });
  for (const auto& c : candidates)
    if (c.empty()) return std::nullopt;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    std::vector<typename S::value_type> e(n * n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) e[i * n + j] = candidates[j][pick[j]][i];
    Morphism<S> g(ring, f.cod(), f.dom(), std::move(e));
    if (are_inverse(f, g)) return g;
    std::size_t pos = n;
    while (true) {
      if (pos == 0) return std::nullopt;
      --pos;
      if (++pick[pos] < candidates[pos].size()) break;
      pick[pos] = 0;
    }
  }
}

/// A morphism together with a verified two-sided inverse.
template <SemiringLike S>
struct Iso {
  Morphism<S> forward;
  Morphism<S> backward;

  static Iso from(const Morphism<S>& f, std::uint64_t cap = default_invert_cap) {
    auto g = invert(f, cap);
    if (!g) throw NonInvertibleFamily("morphism " + f.dom().label + " -> " + f.cod().label + " is not invertible");
    return Iso{f, *g};
  }
  static Iso from_pair(const Morphism<S>& f, const Morphism<S>& g) {
    if (!are_inverse(f, g)) throw NonInvertibleFamily("supplied inverse does not verify");
    return Iso{f, g};
  }
};

/**
 * Isomorphisms i_A : A -> F_rank(A) for the objects in play. Canonical objects
 * map to identities unless overridden.
 */
template <SemiringLike S>
class IsoFamily {
 public:
  explicit IsoFamily(std::shared_ptr<const S> ring) : ring_(std::move(ring)) {}

  const std::shared_ptr<const S>& ring() const noexcept { return ring_; }

  void set(const FreeObject& a, Iso<S> iso) {
    if (iso.forward.dom() != a || iso.forward.cod() != FreeObject::canonical(a.rank))
      throw DimensionMismatch("iso for " + a.label + " must go to F" + std::to_string(a.rank));
    isos_.insert_or_assign(a, std::move(iso));
  }

  bool covers(const FreeObject& a) const { return a.is_canonical() || isos_.count(a) > 0; }

  Iso<S> at(const FreeObject& a) const {
    if (auto it = isos_.find(a); it != isos_.end()) return it->second;
    if (a.is_canonical()) return Iso<S>{identity(ring_, a), identity(ring_, a)};
    throw MissingIso("no isomorphism supplied for object " + a.label);
  }

  std::vector<FreeObject> objects() const {
    std::vector<FreeObject> out;
    for (const auto& [a, _] : isos_) out.push_back(a);
    return out;
  }

 private:
  std::shared_ptr<const S> ring_;
  std::map<FreeObject, Iso<S>> isos_;
};

}  // namespace semicat
