#pragma once

/**
 * @file verify.hpp
 * @brief Functor axioms for a black-box endofunctor, checked up to its cap.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "semicat/ibn/classify.hpp"
#include "semicat/matcat/biproduct.hpp"
#include "semicat/matcat/functor.hpp"
#include "semicat/matcat/io.hpp"
#include "semicat/matcat/sweep.hpp"
#include "semicat/report/check.hpp"

namespace semicat {

struct VerifyOptions {
  SweepOptions sweep;
  std::uint64_t seed = 0;
};

struct FunctorReport {
  std::string functor;
  std::vector<CheckRecord> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const CheckRecord* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {

template <SemiringLike S>
nlohmann::json literal_list(std::initializer_list<std::pair<const char*, const Morphism<S>*>> items) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, f] : items) j[k] = morphism_to_json(*f);
  return j;
}

/// Runs the functor; exceptions and wrong endpoints become failure text.
template <SemiringLike S>
std::optional<Morphism<S>> image(const BlackBoxFunctor<S>& F, const Morphism<S>& f, std::string& why) {
  try {
    auto g = F(f);
    if (g.rows() != F.object(f.dom()).rank || g.cols() != F.object(f.cod()).rank) {
      why = "image of " + render_literal(f) + " has the wrong shape";
      return std::nullopt;
    }
    return g;
  } catch (const std::exception& e) {
    why = std::string("functor threw on ") + render_literal(f) + ": " + e.what();
    return std::nullopt;
  }
}

template <SemiringLike S>
bool same_matrix(const Morphism<S>& a, const Morphism<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    if (!a.semiring().equal(a.entries()[i], b.entries()[i])) return false;
  return true;
}

}  // namespace detail

/**
 * Names of the checks, in report order: object-stability, identity,
 * composition, zero, additivity, biproduct.
 */
template <SemiringLike S>
FunctorReport verify_functor(const BlackBoxFunctor<S>& F, const VerifyOptions& opt = {}) {
  FunctorReport rep{F.name, {}};
  Rng rng(opt.seed);
  const auto& ring = F.ring;
  const auto objects = F.objects();
  auto sampled_seed = [&](CheckRecord& c) {
    if (c.regime == Regime::sampled) c.seed = opt.seed;
  };

  {
    CheckRecord c{"object-stability"};
    for (const auto& a : objects) {
      ++c.cases;
      FreeObject b;
      try {
        b = F.object(a);
      } catch (const std::exception& e) {
        c.fail({{"object", a.label}}, e.what());
        continue;
      }
      if (b.rank == a.rank) continue;
      bool iso = false;
      std::string why = "rank " + std::to_string(a.rank) + " sent to rank " + std::to_string(b.rank);
      if (a.rank > 0 && b.rank > 0) {
        try {
          iso = free_iso_witness(ring, a.rank, b.rank).has_value();
          if (!iso) why += ", and the carrier has no F_n ~ F_m witness";
        } catch (const SearchCapExceeded& e) {
          why += std::string(", undecided: ") + e.what();
        }
      }
      if (!iso) c.fail({{"object", a.label}, {"image", b.label}, {"image_rank", b.rank}}, why);
    }
    rep.checks.push_back(std::move(c));
  }

  {
    CheckRecord c{"identity"};
    for (const auto& a : objects) {
      ++c.cases;
      std::string why;
      const auto id = identity(ring, a);
      auto g = detail::image(F, id, why);
      if (!g) {
        c.fail(detail::literal_list<S>({{"f", &id}}), why);
      } else if (!detail::same_matrix(*g, identity(ring, F.object(a)))) {
        c.fail(detail::literal_list<S>({{"f", &id}, {"image", &*g}}), "identity not preserved");
      }
    }
    rep.checks.push_back(std::move(c));
  }

  {
    CheckRecord c{"composition"};
    for (const auto& a : objects)
      for (const auto& b : objects)
        for (const auto& d : objects) {
          auto st = sweep(ring, {Shape{a, b}, Shape{b, d}}, opt.sweep, rng, [&](const std::vector<Morphism<S>>& t) {
            std::string why;
            auto fg = compose(t[0], t[1]);
            auto lhs = detail::image(F, fg, why);
            auto f = detail::image(F, t[0], why);
            auto g = detail::image(F, t[1], why);
            if (!lhs || !f || !g) {
              c.fail(detail::literal_list<S>({{"f", &t[0]}, {"g", &t[1]}}), why);
              return false;
            }
            auto rhs = compose(*f, *g);
            if (!detail::same_matrix(*lhs, rhs)) {
              c.fail(detail::literal_list<S>({{"f", &t[0]}, {"g", &t[1]}, {"F(f;g)", &*lhs}, {"F(f);F(g)", &rhs}}),
                     "F(f;g) != F(f);F(g)");
              return false;
            }
            return true;
          });
          c.absorb(st.regime, st.cases);
        }
    sampled_seed(c);
    rep.checks.push_back(std::move(c));
  }

  {
    CheckRecord c{"zero"};
    for (const auto& a : objects)
      for (const auto& b : objects) {
        ++c.cases;
        std::string why;
        auto z = zero_morphism(ring, a, b);
        auto g = detail::image(F, z, why);
        if (!g) {
          c.fail(detail::literal_list<S>({{"f", &z}}), why);
        } else if (!detail::same_matrix(*g, zero_morphism(ring, F.object(a), F.object(b)))) {
          c.fail(detail::literal_list<S>({{"f", &z}, {"image", &*g}}), "zero morphism not preserved");
        }
      }
    rep.checks.push_back(std::move(c));
  }

  {
    CheckRecord c{"additivity"};
    for (const auto& a : objects)
      for (const auto& b : objects) {
        auto st = sweep(ring, {Shape{a, b}, Shape{a, b}}, opt.sweep, rng, [&](const std::vector<Morphism<S>>& t) {
          std::string why;
          auto sum = add_morphisms(t[0], t[1]);
          auto lhs = detail::image(F, sum, why);
          auto f = detail::image(F, t[0], why);
          auto g = detail::image(F, t[1], why);
          if (!lhs || !f || !g) {
            c.fail(detail::literal_list<S>({{"f", &t[0]}, {"g", &t[1]}}), why);
            return false;
          }
          auto rhs = add_morphisms(*f, *g);
          if (!detail::same_matrix(*lhs, rhs)) {
            c.fail(detail::literal_list<S>({{"f", &t[0]}, {"g", &t[1]}, {"F(f+g)", &*lhs}, {"F(f)+F(g)", &rhs}}),
                   "F(f+g) != F(f)+F(g)");
            return false;
          }
          return true;
        });
        c.absorb(st.regime, st.cases);
      }
    sampled_seed(c);
    rep.checks.push_back(std::move(c));
  }

  {
    CheckRecord c{"biproduct"};
    for (std::size_t n = 1; n <= F.cap; ++n) {
      ++c.cases;
      auto sys = biproduct_system(ring, n);
      std::vector<Morphism<S>> mu, pi;
      std::string why;
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        auto m = detail::image(F, sys.injections[i], why);
        auto p = detail::image(F, sys.projections[i], why);
        if (!m || !p) {
          c.fail(detail::literal_list<S>({{"mu", &sys.injections[i]}}), why);
          ok = false;
        } else {
          mu.push_back(*m);
          pi.push_back(*p);
        }
      }
      if (!ok) continue;
      const auto fn = F.object(FreeObject::canonical(n));
      const auto f1 = F.object(FreeObject::canonical(1));
      auto sum = zero_morphism(ring, fn, fn);
      for (std::size_t i = 0; i < n; ++i) sum = add_morphisms(sum, compose(pi[i], mu[i]));
      if (!detail::same_matrix(sum, identity(ring, fn))) {
        c.fail({{"rank", n}, {"sum", morphism_to_json(sum)}}, "sum of F(pi_i);F(mu_i) is not the identity");
        continue;
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          auto prod = compose(mu[i], pi[j]);
          auto want = i == j ? identity(ring, f1) : zero_morphism(ring, f1, f1);
          if (!detail::same_matrix(prod, want))
            c.fail({{"rank", n}, {"i", i}, {"j", j}, {"F(mu_i);F(pi_j)", morphism_to_json(prod)}},
                   "images of injections and projections are not a biproduct system");
        }
    }
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

/**
 * Re-evaluates one failed check on the morphisms recorded in its witness.
 * Returns true if the failure reproduces.
 */
template <SemiringLike S>
bool replay_failure(const BlackBoxFunctor<S>& F, const CheckRecord& rec) {
  const auto& w = rec.witness;
  auto load = [&](const char* key) { return morphism_from_json(w.at(key), F.ring); };
  std::string why;
  if (rec.name == "composition" || rec.name == "additivity") {
    auto f = load("f"), g = load("g");
    auto combined = rec.name == "composition" ? compose(f, g) : add_morphisms(f, g);
    auto lhs = detail::image(F, combined, why);
    auto ff = detail::image(F, f, why), gg = detail::image(F, g, why);
    if (!lhs || !ff || !gg) return true;
    auto rhs = rec.name == "composition" ? compose(*ff, *gg) : add_morphisms(*ff, *gg);
    return !detail::same_matrix(*lhs, rhs);
  }
  if (rec.name == "identity" || rec.name == "zero") {
    auto f = load("f");
    auto g = detail::image(F, f, why);
    if (!g) return true;
    auto want = rec.name == "identity" ? identity(F.ring, F.object(f.dom()))
                                       : zero_morphism(F.ring, F.object(f.dom()), F.object(f.cod()));
    return !detail::same_matrix(*g, want);
  }
  if (rec.name == "object-stability") {
    for (const auto& a : F.objects())
      if (a.label == w.at("object").template get<std::string>()) return F.object(a).rank != a.rank;
    return false;
  }
  if (rec.name == "biproduct") {
    BlackBoxFunctor<S> one = F;
    one.cap = w.at("rank").template get<std::size_t>();
    auto sub = verify_functor(one, {{1, 1}, 0});
    return !sub.find("biproduct")->passed;
  }
  throw ConfigError("cannot replay check '" + rec.name + "'");
}

inline nlohmann::json to_json(const FunctorReport& r, bool with_timing = false) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c, with_timing));
  return {{"functor", r.functor}, {"checks", checks}, {"passed", r.passed()}};
}

}  // namespace semicat
