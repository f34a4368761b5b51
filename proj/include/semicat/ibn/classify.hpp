#pragma once

/**
 * @file classify.hpp
 * @brief Invariant basis number and type (n, h) by witness search.
 */

#include <optional>
#include <string>

#include <json.hpp>

#include "semicat/error.hpp"
#include "semicat/matcat/invert.hpp"
#include "semicat/matcat/io.hpp"
#include "semicat/semiring/semiring.hpp"

namespace semicat {

/// A : F_n -> F_m and B : F_m -> F_n with A;B = 1 and B;A = 1.
template <SemiringLike S>
struct IsoWitness {
  Morphism<S> a;
  Morphism<S> b;
};

/// How a free_iso_witness answer was reached.
enum class IbnRegime { identity, cardinality, homomorphism, exhaustive };

inline const char* to_string(IbnRegime r) {
  switch (r) {
    case IbnRegime::identity: return "identity";
    case IbnRegime::cardinality: return "cardinality";
    case IbnRegime::homomorphism: return "homomorphism";
    case IbnRegime::exhaustive: return "exhaustive";
  }
  return "";
}

struct IbnSearchOptions {
  std::uint64_t cap = std::uint64_t{1} << 26;  ///< bound on |R|^(2nm)
  bool shortcuts = true;                      ///< false forces exhaustive search
};

template <SemiringLike S>
struct IbnAnswer {
  std::optional<IsoWitness<S>> witness;
  IbnRegime regime = IbnRegime::exhaustive;
  std::uint64_t candidates = 0;  ///< A-matrices examined by the exhaustive search
};

namespace detail {

/// Infinite built-ins admit a unital homomorphism onto B or Z_2, both IBN, so
/// F_n and F_m are never isomorphic for n != m.
inline bool has_ibn_image(const Semiring& r) { return !r.is_finite(); }

template <SemiringLike S>
bool has_ibn_image(const S&) {
  return false;
}

}  // namespace detail

/**
 * Searches A (n x m) in lexicographic row-major order. For each A, the columns
 * of a right inverse are found one at a time and combinations are checked as
 * left inverses, so most A are rejected after |R|^m products.
 */
template <SemiringLike S>
IbnAnswer<S> exhaustive_iso_search(const std::shared_ptr<const S>& ring, std::size_t n, std::size_t m,
                                   std::uint64_t cap) {
  auto half = hom_set_size(*ring, n, m);
  if (!half || *half > cap / std::max<std::uint64_t>(*half, 1))
    throw SearchCapExceeded("witness search F" + std::to_string(n) + " ~ F" + std::to_string(m) +
                            " over " + std::string(ring->name()) + " exceeds the cap");
  const auto fn = FreeObject::canonical(n), fm = FreeObject::canonical(m), f1 = FreeObject::canonical(1);
  const S& r = *ring;
  IbnAnswer<S> out;
  for_each_matrix(ring, fn, fm, [&](const Morphism<S>& a) {
    ++out.candidates;
    std::vector<std::vector<std::vector<typename S::value_type>>> columns(n);
    for_each_matrix(ring, fm, f1, [&](const Morphism<S>& col) {
      auto image = compose(a, col);
      for (std::size_t j = 0; j < n; ++j) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = r.equal(image.at(i, 0), i == j ? r.one() : r.zero());
        if (ok) columns[j].push_back(col.entries());
      }
      return true;
    });
    for (const auto& c : columns)
      if (c.empty()) return true;
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      std::vector<typename S::value_type> e(m * n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) e[i * n + j] = columns[j][pick[j]][i];
      Morphism<S> b(ring, fm, fn, std::move(e));
      if (are_inverse(a, b)) {
        out.witness = IsoWitness<S>{a, b};
        return false;
      }
      std::size_t pos = n;
      while (true) {
        if (pos == 0) return true;
        --pos;
        if (++pick[pos] < columns[pos].size()) break;
        pick[pos] = 0;
      }
    }
  });
  out.regime = IbnRegime::exhaustive;
  return out;
}

/// Witness for F_n ~ F_m, or none. Throws SearchCapExceeded when undecidable within the cap.
template <SemiringLike S>
IbnAnswer<S> free_iso_witness_detailed(const std::shared_ptr<const S>& ring, std::size_t n, std::size_t m,
                                       IbnSearchOptions opt = {}) {
  if (n == 0 || m == 0) throw ZeroRank("free_iso_witness needs positive ranks");
  IbnAnswer<S> out;
  if (n == m) {
    out.witness = IsoWitness<S>{identity(ring, n), identity(ring, n)};
    out.regime = IbnRegime::identity;
    return out;
  }
  if (opt.shortcuts) {
    if (auto k = ring->finite_size(); k && *k > 1) {
      out.regime = IbnRegime::cardinality;
      return out;
    }
    if (detail::has_ibn_image(*ring)) {
      out.regime = IbnRegime::homomorphism;
      return out;
    }
  }
  if (!ring->finite_size())
    throw SearchCapExceeded(std::string(ring->name()) + " has no decision procedure for F_n ~ F_m");
  return exhaustive_iso_search(ring, n, m, opt.cap);
}

template <SemiringLike S>
std::optional<IsoWitness<S>> free_iso_witness(const std::shared_ptr<const S>& ring, std::size_t n, std::size_t m,
                                              IbnSearchOptions opt = {}) {
  return free_iso_witness_detailed(ring, n, m, opt).witness;
}

template <SemiringLike S>
struct TypeClassification {
  bool ibn = true;        ///< true: IBNUpTo(cap)
  std::size_t cap = 0;
  std::size_t n = 0, h = 0;
  std::optional<IsoWitness<S>> witness;

  std::string label() const {
    return ibn ? "IBNUpTo(" + std::to_string(cap) + ")"
               : "Type(" + std::to_string(n) + "," + std::to_string(h) + ")";
  }
  friend bool same_class(const TypeClassification& x, const TypeClassification& y) {
    return x.ibn == y.ibn && x.cap == y.cap && x.n == y.n && x.h == y.h;
  }
};

/// Scans (n, n + h), n + h <= cap, lexicographically in (n, h).
template <SemiringLike S>
TypeClassification<S> classify_type(const std::shared_ptr<const S>& ring, std::size_t cap,
                                    IbnSearchOptions opt = {}) {
  if (cap < 2) throw ConfigError("classify_type needs cap >= 2");
  TypeClassification<S> out;
  out.cap = cap;
  for (std::size_t n = 1; n < cap; ++n)
    for (std::size_t h = 1; n + h <= cap; ++h)
      if (auto w = free_iso_witness(ring, n, n + h, opt)) {
        out.ibn = false;
        out.n = n;
        out.h = h;
        out.witness = std::move(w);
        return out;
      }
  return out;
}

template <SemiringLike S>
nlohmann::json classification_to_json(const TypeClassification<S>& c) {
  nlohmann::json j{{"classification", c.label()}, {"cap", c.cap}};
  if (c.ibn) {
    j["kind"] = "IBNUpTo";
  } else {
    j["kind"] = "Type";
    j["n"] = c.n;
    j["h"] = c.h;
    j["witness"] = {{"A", morphism_to_json(c.witness->a)}, {"B", morphism_to_json(c.witness->b)}};
  }
  return j;
}

template <SemiringLike S>
struct LeftRightReport {
  TypeClassification<S> left;
  TypeClassification<S> right;
  bool agree = false;
};

/// Classifies R and R^op (left and right modules) and compares.
inline LeftRightReport<Semiring> left_right_ibn_agree(const SemiringPtr& ring, std::size_t cap,
                                                      IbnSearchOptions opt = {}) {
  LeftRightReport<Semiring> rep{classify_type(ring, cap, opt), classify_type(opposite_semiring(ring), cap, opt)};
  rep.agree = same_class(rep.left, rep.right);
  return rep;
}

}  // namespace semicat
