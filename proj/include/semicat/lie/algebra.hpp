#pragma once

/**
 * @file algebra.hpp
 * @brief Finite-dimensional Lie algebras given by structure constants.
 */

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "semicat/lie/coefficient.hpp"

namespace semicat {

/// Coordinates in the ordered basis e_0..e_{d-1}.
using LieElement = std::vector<Coeff>;

/// One nonzero structure constant: [e_i, e_j] has coefficient `coeff` at e_k.
struct BracketEntry {
  std::size_t i, j, k;
  Coeff coeff;
};

class LieAlgebra {
 public:
  LieAlgebra() = default;

  const std::string& name() const noexcept { return name_; }
  const CoeffRingPtr& ring() const noexcept { return ring_; }
  const CoefficientRing& coefficients() const { return *ring_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    throw IndexOutOfRange("no basis element named '" + label + "'");
  }

  /// [e_i, e_j] in coordinates.
  const LieElement& basis_bracket(std::size_t i, std::size_t j) const { return table_.at(i * dim() + j); }

  LieElement zero() const { return LieElement(dim(), Coeff(0)); }
  LieElement basis(std::size_t i) const {
    auto v = zero();
    v.at(i) = 1;
    return v;
  }

  LieElement add(const LieElement& a, const LieElement& b) const {
    LieElement r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = ring_->add(a[i], b[i]);
    return r;
  }
  LieElement sub(const LieElement& a, const LieElement& b) const {
    LieElement r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = ring_->sub(a[i], b[i]);
    return r;
  }
  LieElement scale(const Coeff& c, const LieElement& a) const {
    LieElement r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = ring_->mul(c, a[i]);
    return r;
  }
  bool is_zero(const LieElement& a) const {
    for (const auto& c : a)
      if (!ring_->is_zero(c)) return false;
    return true;
  }

  LieElement bracket(const LieElement& a, const LieElement& b) const {
    auto r = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
      if (ring_->is_zero(a[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (ring_->is_zero(b[j])) continue;
        const auto c = ring_->mul(a[i], b[j]);
        const auto& ij = basis_bracket(i, j);
        for (std::size_t k = 0; k < dim(); ++k) r[k] = ring_->add(r[k], ring_->mul(c, ij[k]));
      }
    }
    return r;
  }

  /// Matrix of ad(a) acting on column coordinates: column j is [a, e_j].
  std::vector<std::vector<Coeff>> ad_matrix(const LieElement& a) const {
    std::vector<std::vector<Coeff>> m(dim(), std::vector<Coeff>(dim()));
    for (std::size_t j = 0; j < dim(); ++j) {
      auto col = bracket(a, basis(j));
      for (std::size_t i = 0; i < dim(); ++i) m[i][j] = col[i];
    }
    return m;
  }

  std::string render(const LieElement& a) const {
    std::string s;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (ring_->is_zero(a[i])) continue;
      if (!s.empty()) s += " + ";
      if (a[i] != 1) s += ring_->render(a[i]) + "*";
      s += labels_[i];
    }
    return s.empty() ? "0" : s;
  }

  LieElement sample(Rng& rng) const {
    LieElement v(dim());
    for (auto& c : v) c = ring_->sample(rng);
    return v;
  }

  friend LieAlgebra validate_lie(std::string, CoeffRingPtr, std::vector<std::string>,
                                 const std::vector<BracketEntry>&);

 private:
  std::string name_;
  CoeffRingPtr ring_;
  std::vector<std::string> labels_;
  std::vector<LieElement> table_;  ///< row-major d x d
};

/**
 * Builds the bracket table from constants given for i < j (entries with
 * i > j are accepted when they agree with antisymmetry) and checks the
 * Jacobi identity on all d^3 basis triples.
 */
inline LieAlgebra validate_lie(std::string name, CoeffRingPtr ring, std::vector<std::string> labels,
                               const std::vector<BracketEntry>& constants) {
  const std::size_t d = labels.size();
  LieAlgebra L;
  L.name_ = std::move(name);
  L.ring_ = std::move(ring);
  L.labels_ = std::move(labels);
  const auto& K = *L.ring_;
  L.table_.assign(d * d, LieElement(d, Coeff(0)));
  std::map<std::pair<std::size_t, std::size_t>, LieElement> given;
  for (const auto& e : constants) {
    if (e.i >= d || e.j >= d || e.k >= d)
      throw IndexOutOfRange("bracket index out of range: (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") -> " +
                            std::to_string(e.k));
    if (!K.in_ring(e.coeff)) throw ConfigError("structure constant " + e.coeff.str() + " is not in " + K.name());
    auto& v = given.try_emplace({e.i, e.j}, LieElement(d, Coeff(0))).first->second;
    v[e.k] = K.add(v[e.k], e.coeff);
  }
  for (const auto& [ij, v] : given) {
    const auto [i, j] = ij;
    if (i == j) {
      if (!L.is_zero(v))
        throw AntisymmetryViolation("[" + L.labels_[i] + "," + L.labels_[i] + "] = " + L.render(v) + " is not zero");
      continue;
    }
    auto mirror = given.find({j, i});
    if (mirror != given.end() && L.add(v, mirror->second) != L.zero())
      throw AntisymmetryViolation("[" + L.labels_[i] + "," + L.labels_[j] + "] and [" + L.labels_[j] + "," +
                                  L.labels_[i] + "] are not negatives");
    L.table_[i * d + j] = v;
    L.table_[j * d + i] = L.scale(K.from_int(-1), v);
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const auto ei = L.basis(i), ej = L.basis(j), ek = L.basis(k);
        auto r = L.add(L.add(L.bracket(L.bracket(ei, ej), ek), L.bracket(L.bracket(ej, ek), ei)),
                       L.bracket(L.bracket(ek, ei), ej));
        if (!L.is_zero(r)) throw JacobiViolation(i, j, k, L.render(r));
      }
  return L;
}

/// Convenience: all constants as (i, j, k, integer coefficient) mapped into K.
inline LieAlgebra make_lie(std::string name, const CoeffRingPtr& ring, std::vector<std::string> labels,
                           const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, long long>>& c) {
  std::vector<BracketEntry> e;
  for (const auto& [i, j, k, v] : c) e.push_back({i, j, k, ring->from_int(v)});
  return validate_lie(std::move(name), ring, std::move(labels), e);
}

/// sl2 in the basis order (f, h, e): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
inline LieAlgebra sl2(const CoeffRingPtr& ring) {
  // f = 0, h = 1, e = 2; constants stored for i < j.
  return make_lie("sl2", ring, {"f", "h", "e"}, {{0, 1, 0, 2}, {0, 2, 1, -1}, {1, 2, 2, 2}});
}

/// Heisenberg algebra (x, y, z) with [x,y] = z central.
inline LieAlgebra heisenberg(const CoeffRingPtr& ring) { return make_lie("heisenberg", ring, {"x", "y", "z"}, {{0, 1, 2, 1}}); }

inline LieAlgebra abelian(const CoeffRingPtr& ring, std::size_t d) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back("x" + std::to_string(i + 1));
  return make_lie("abelian" + std::to_string(d), ring, std::move(labels), {});
}

}  // namespace semicat
