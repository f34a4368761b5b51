#pragma once

/**
 * @file semimorphism.hpp
 * @brief Semi-automorphisms of L, their lifts to U(L), and U(L) (truncated by
 * degree) as a scalar carrier for the matrix category.
 */

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "semicat/autos/semi_inner.hpp"
#include "semicat/lie/pbw.hpp"
#include "semicat/report/check.hpp"

namespace semicat {

/// (delta, theta): theta(sum c_i e_i) = sum delta(c_i) images[i].
struct LieSemiMorphism {
  CoeffAutomorphism delta;
  std::vector<LieElement> images;

  LieElement apply(const LieAlgebra& L, const LieElement& x) const {
    auto r = L.zero();
    for (std::size_t i = 0; i < L.dim(); ++i)
      if (!L.coefficients().is_zero(x[i])) r = L.add(r, L.scale(delta.apply(L.coefficients(), x[i]), images.at(i)));
    return r;
  }
  friend bool operator==(const LieSemiMorphism&, const LieSemiMorphism&) = default;
};

inline LieSemiMorphism identity_semimorphism(const LieAlgebra& L) {
  LieSemiMorphism t;
  for (std::size_t i = 0; i < L.dim(); ++i) t.images.push_back(L.basis(i));
  return t;
}

/// Chevalley involution of sl2 in the basis (f, h, e): e <-> f, h -> -h.
inline LieSemiMorphism chevalley_involution(const LieAlgebra& sl2) {
  const auto& K = sl2.coefficients();
  LieSemiMorphism t;
  t.images = {sl2.basis(2), sl2.scale(K.from_int(-1), sl2.basis(1)), sl2.basis(0)};
  return t;
}

namespace detail {

/// Inverse of a square matrix over the fraction field of K; nullopt if singular.
inline std::optional<std::vector<std::vector<Coeff>>> fraction_inverse(const CoefficientRing& K,
                                                                      std::vector<std::vector<Coeff>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Coeff>> inv(n, std::vector<Coeff>(n, Coeff(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = K.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && K.is_zero(a[piv][col])) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const auto s = K.field_inverse(a[col][col]);
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] = K.mul(a[col][j], s);
      inv[col][j] = K.mul(inv[col][j], s);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || K.is_zero(a[r][col])) continue;
      const auto f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] = K.sub(a[r][j], K.mul(f, a[col][j]));
        inv[r][j] = K.sub(inv[r][j], K.mul(f, inv[col][j]));
      }
    }
  }
  return inv;
}

}  // namespace detail

/**
 * Checks theta([e_i, e_j]) = [theta e_i, theta e_j] on all basis pairs
 * (NotBracketPreserving) and that theta is bijective over K
 * (NotAnAutomorphism). Returns the inverse semi-morphism.
 */
inline LieSemiMorphism verify_and_invert(const LieAlgebra& L, const LieSemiMorphism& t) {
  const auto& K = L.coefficients();
  if (t.images.size() != L.dim()) throw DimensionMismatch("semi-morphism needs one image per basis element");
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j) {
      auto lhs = t.apply(L, L.basis_bracket(i, j));
      auto rhs = L.bracket(t.images[i], t.images[j]);
      if (lhs != rhs)
        throw NotBracketPreserving("theta([" + L.labels()[i] + "," + L.labels()[j] + "]) = " + L.render(lhs) +
                                   " but [theta " + L.labels()[i] + ", theta " + L.labels()[j] + "] = " + L.render(rhs));
    }
  auto inv = detail::fraction_inverse(K, t.images);
  if (!inv) throw NotAnAutomorphism("basis images are linearly dependent");
  // theta(x) = delta(x) M, so theta^-1(y) = delta^-1(y M^-1).
  LieSemiMorphism r;
  r.delta = t.delta.inverse(K);
  for (std::size_t j = 0; j < L.dim(); ++j) {
    LieElement row(L.dim());
    for (std::size_t k = 0; k < L.dim(); ++k) {
      if (!K.in_ring((*inv)[j][k])) throw NotAnAutomorphism("inverse is not defined over " + K.name());
      row[k] = r.delta.apply(K, (*inv)[j][k]);
    }
    r.images.push_back(std::move(row));
  }
  return r;
}

/// theta then phi.
inline LieSemiMorphism then(const LieAlgebra& L, const LieSemiMorphism& theta, const LieSemiMorphism& phi) {
  LieSemiMorphism r;
  r.delta = theta.delta.then(L.coefficients(), phi.delta);
  for (const auto& img : theta.images) r.images.push_back(phi.apply(L, img));
  return r;
}

/// The ring map on U(L) extending theta: monomials go to products of images.
inline PbwElement lift_apply(const LieAlgebra& L, const LieSemiMorphism& t, const PbwElement& u) {
  const auto& K = L.coefficients();
  std::vector<PbwElement> gens;
  for (const auto& img : t.images) gens.push_back(pbw_from_lie(L, img));
  PbwElement out;
  for (const auto& [a, c] : u.terms) {
    PbwElement mono = pbw_scalar(L, t.delta.apply(K, c));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::uint32_t k = 0; k < a[i]; ++k) mono = pbw_multiply(mono, gens[i], L);
    out = pbw_add(L, out, mono);
  }
  return out;
}

struct LiftOptions {
  std::uint32_t degree_cap = 3;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
};

struct LiftedSemiMorphism {
  LieSemiMorphism theta;
  LieSemiMorphism inverse_theta;
  std::vector<CheckRecord> checks;

  PbwElement apply(const LieAlgebra& L, const PbwElement& u) const { return lift_apply(L, theta, u); }
  PbwElement apply_inverse(const LieAlgebra& L, const PbwElement& u) const { return lift_apply(L, inverse_theta, u); }
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/**
 * Lifts theta to U(L) and records: restriction to L equals theta (basis),
 * additivity and multiplicativity on sampled pairs of degree <= cap/2, and
 * inverse round trips.
 */
inline LiftedSemiMorphism lift_semi_automorphism(const LieAlgebra& L, const LieSemiMorphism& theta,
                                                 const LiftOptions& opt = {}) {
  LiftedSemiMorphism out{theta, verify_and_invert(L, theta), {}};
  Rng rng(opt.seed);
  {
    CheckRecord c{"restriction-to-L"};
    for (std::size_t i = 0; i < L.dim(); ++i) {
      ++c.cases;
      auto got = out.apply(L, pbw_from_lie(L, L.basis(i)));
      if (got != pbw_from_lie(L, theta.images[i]))
        c.fail({{"basis", L.labels()[i]}, {"image", render(got, L)}}, "lift differs from theta on L");
    }
    out.checks.push_back(std::move(c));
  }
  const std::uint32_t half = opt.degree_cap / 2;
  CheckRecord add{"additive"}, mul{"multiplicative"}, inv{"inverse"};
  for (auto* c : {&add, &mul, &inv}) {
    c->regime = Regime::sampled;
    c->seed = opt.seed;
  }
  for (std::size_t s = 0; s < opt.samples; ++s) {
    auto u = pbw_sample(L, rng, half), v = pbw_sample(L, rng, half);
    auto fu = out.apply(L, u), fv = out.apply(L, v);
    ++add.cases;
    if (out.apply(L, pbw_add(L, u, v)) != pbw_add(L, fu, fv))
      add.fail({{"u", render(u, L)}, {"v", render(v, L)}}, "lift(u+v) != lift(u)+lift(v)");
    ++mul.cases;
    if (out.apply(L, pbw_multiply(u, v, L)) != pbw_multiply(fu, fv, L))
      mul.fail({{"u", render(u, L)}, {"v", render(v, L)}}, "lift(uv) != lift(u)lift(v)");
    ++inv.cases;
    if (out.apply_inverse(L, fu) != u) inv.fail({{"u", render(u, L)}}, "inverse lift does not undo the lift");
  }
  out.checks.push_back(std::move(add));
  out.checks.push_back(std::move(mul));
  out.checks.push_back(std::move(inv));
  return out;
}

/// Multiplicativity on every pair of PBW monomials of degree <= cap each.
inline CheckRecord lift_multiplicative_on_monomials(const LieAlgebra& L, const LiftedSemiMorphism& s, std::uint32_t cap) {
  CheckRecord c{"multiplicative-monomials"};
  const auto monos = monomials_up_to(L.dim(), cap);
  for (const auto& a : monos)
    for (const auto& b : monos) {
      ++c.cases;
      auto u = pbw_monomial(L, a), v = pbw_monomial(L, b);
      if (s.apply(L, pbw_multiply(u, v, L)) != pbw_multiply(s.apply(L, u), s.apply(L, v), L)) {
        c.fail({{"u", render(u, L)}, {"v", render(v, L)}}, "lift(uv) != lift(u)lift(v)");
        return c;
      }
    }
  return c;
}

/**
 * U(L) with products limited to total degree <= cap. Exceeding the cap throws
 * DegreeCapExceeded rather than truncating.
 */
class EnvelopingRing {
 public:
  using value_type = PbwElement;

  EnvelopingRing(std::shared_ptr<const LieAlgebra> L, std::uint32_t degree_cap, std::uint32_t sample_degree = 1)
      : L_(std::move(L)), cap_(degree_cap), sample_degree_(sample_degree) {}

  const LieAlgebra& algebra() const { return *L_; }
  std::uint32_t degree_cap() const { return cap_; }

  PbwElement zero() const { return {}; }
  PbwElement one() const { return pbw_one(*L_); }
  PbwElement add(const PbwElement& a, const PbwElement& b) const { return pbw_add(*L_, a, b); }
  PbwElement mul(const PbwElement& a, const PbwElement& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    if (*pbw_degree(a) + *pbw_degree(b) > cap_)
      throw DegreeCapExceeded("product of degree " + std::to_string(*pbw_degree(a) + *pbw_degree(b)) +
                              " exceeds the cap " + std::to_string(cap_));
    return pbw_multiply(a, b, *L_);
  }
  bool equal(const PbwElement& a, const PbwElement& b) const { return a == b; }
  std::optional<std::size_t> finite_size() const { return std::nullopt; }
  PbwElement element(std::size_t) const { throw UnsupportedCarrier("U(L) is infinite"); }
  PbwElement sample(Rng& rng) const { return pbw_sample(*L_, rng, sample_degree_, 2); }
  std::string render(const PbwElement& a) const { return semicat::render(a, *L_); }
  PbwElement parse(const std::string& text) const {
    auto u = parse_pbw(text, *L_, [this](const PbwElement& a, const PbwElement& b) { return mul(a, b); });
    check_cap(u);
    return u;
  }
  std::string name() const {
    return "U(" + L_->name() + ")<=" + std::to_string(cap_) + "/" + L_->coefficients().name();
  }
  std::optional<PbwElement> inverse(const PbwElement& a) const {
    if (!is_unit(a, *L_)) return std::nullopt;
    return pbw_scalar(*L_, *L_->coefficients().inverse(a.terms.begin()->second));
  }

  void check_cap(const PbwElement& a) const {
    auto d = pbw_degree(a);
    if (d && *d > cap_)
      throw DegreeCapExceeded("element of degree " + std::to_string(*d) + " exceeds the cap " + std::to_string(cap_));
  }

 private:
  std::shared_ptr<const LieAlgebra> L_;
  std::uint32_t cap_;
  std::uint32_t sample_degree_;
};

using EnvelopingPtr = std::shared_ptr<const EnvelopingRing>;

/// The lift as a carrier map for the skew-inner machinery.
inline ScalarMap<EnvelopingRing> scalar_map(const EnvelopingPtr& U, const LiftedSemiMorphism& s, std::string name) {
  const EnvelopingRing* raw = U.get();
  return {std::move(name),
          [U, s, raw](const PbwElement& v) {
            auto r = s.apply(raw->algebra(), v);
            raw->check_cap(r);
            return r;
          },
          [U, s, raw](const PbwElement& v) {
            auto r = s.apply_inverse(raw->algebra(), v);
            raw->check_cap(r);
            return r;
          }};
}

/// sigma_Y . nu . sigma_X^-1, realized entrywise.
inline Morphism<EnvelopingRing> hat_sigma_conjugate(const EnvelopingPtr& U, const LiftedSemiMorphism& s,
                                                    const Morphism<EnvelopingRing>& nu) {
  return map_entries(nu, [&](const PbwElement& v) {
    auto r = s.apply(U->algebra(), v);
    U->check_cap(r);
    return r;
  });
}

/**
 * Left U(L)-linearity of v -> sigma(sigma^-1(v) nu) on row vectors v,
 * compared against v * hat(nu): samples scalars u and vectors v of degree 1.
 */
inline CheckRecord hat_sigma_linearity_check(const EnvelopingPtr& U, const LiftedSemiMorphism& s,
                                             const Morphism<EnvelopingRing>& nu, std::size_t samples, std::uint64_t seed) {
  const auto& L = U->algebra();
  CheckRecord c{"hat-sigma-linearity"};
  c.regime = Regime::sampled;
  c.seed = seed;
  Rng rng(seed);
  const auto hat = hat_sigma_conjugate(U, s, nu);
  auto phi = [&](const Morphism<EnvelopingRing>& v) {
    auto pre = map_entries(v, [&](const PbwElement& x) { return s.apply_inverse(L, x); });
    return map_entries(compose(pre, nu), [&](const PbwElement& x) { return s.apply(L, x); });
  };
  for (std::size_t k = 0; k < samples; ++k) {
    ++c.cases;
    auto u = pbw_sample(L, rng, 1, 2);
    auto v = sample_morphism(U, 1, nu.rows(), rng);
    auto uv = map_entries(v, [&](const PbwElement& x) { return U->mul(u, x); });
    auto lhs = phi(uv);
    auto rhs = map_entries(phi(v), [&](const PbwElement& x) { return U->mul(u, x); });
    if (!(lhs == rhs) || !(phi(v) == compose(v, hat))) {
      c.fail({{"u", render(u, L)}, {"v", morphism_to_json(v)}}, "hat-sigma map is not U(L)-linear");
      break;
    }
  }
  return c;
}

}  // namespace semicat
