#pragma once

/**
 * @file inner.hpp
 * @brief Deciding innerness of stable functors, the codiagonal reduction test,
 * and the outer automorphism class count.
 */

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "semicat/autos/normalize.hpp"
#include "semicat/semiring/automorphisms.hpp"

namespace semicat {

struct InnerOptions {
  VerifyOptions verify;
  std::uint64_t search_budget = 65536;  ///< max |R|^(n^2) for the fallback search
  std::size_t samples = 64;             ///< scalar probes on infinite carriers
};

template <SemiringLike S>
struct InnerWitnessResult {
  std::optional<NaturalIsoWitness<S>> witness;
  std::string method;  ///< "reconstruction", "exhaustive" or "refuted"
  CheckRecord naturality{"naturality"};
};

namespace detail {

template <SemiringLike S>
bool fixes_scalars(const BlackBoxFunctor<S>& F, const std::vector<typename S::value_type>& probes) {
  for (const auto& v : probes) {
    auto s = scalar(F.ring, v);
    if (!same_matrix(F(s), s)) return false;
  }
  return true;
}

}  // namespace detail

/**
 * Looks for t_n with F(f) = t_n^-1 ; f ; t_m.
 *
 * If F fixes End(F_1), the candidate t_n is the matrix with rows F(mu_i) and
 * is verified on every tested morphism. Otherwise (or if that fails) finite
 * carriers are searched: each unit t_1 with F([[r]]) = t_1^-1 r t_1, then each
 * invertible t_n in lexicographic order consistent with t_1 on
 * Mor(F_1, F_n) and Mor(F_n, F_1). Returns no witness when the search is
 * exhausted; throws SearchCapExceeded when it cannot be completed.
 */
template <SemiringLike S>
InnerWitnessResult<S> inner_witness(const BlackBoxFunctor<S>& F, const InnerOptions& opt = {}) {
  using V = typename S::value_type;
  const auto& ring = F.ring;
  const S& r = *ring;
  const auto identity_f = identity_functor(ring, F.cap);
  InnerWitnessResult<S> out;
  Rng rng(opt.verify.seed);
  const auto probes = detail::probe_values(r, rng, opt.samples);

  if (detail::fixes_scalars(F, probes)) {
    NaturalIsoWitness<S> w;
    bool invertible = true;
    for (std::size_t n = 0; n <= F.cap && invertible; ++n) {
      std::vector<V> rows;
      for (std::size_t i = 0; i < n; ++i) {
        auto img = F(injection(ring, n, i));
        rows.insert(rows.end(), img.entries().begin(), img.entries().end());
      }
      Morphism<S> u(ring, n, n, std::move(rows));
      std::optional<Morphism<S>> inv;
      try {
        inv = invert(u);
      } catch (const SearchCapExceeded&) {
      }
      if (!inv) invertible = false;
      else w.family.push_back(Iso<S>{u, *inv});
    }
    if (invertible) {
      out.naturality = check_naturality(w, F, identity_f, opt.verify);
      if (out.naturality.passed) {
        out.witness = std::move(w);
        out.method = "reconstruction";
        return out;
      }
    }
  }

  if (!r.finite_size())
    throw SearchCapExceeded("innerness undecided: reconstruction failed over the infinite carrier " +
                            std::string(r.name()));
  for (std::size_t n = 1; n <= F.cap; ++n) {
    auto space = hom_set_size(r, n, n);
    if (!space || *space > opt.search_budget)
      throw SearchCapExceeded("innerness undecided: |R|^" + std::to_string(n * n) + " exceeds the search budget");
  }

  const auto f1 = FreeObject::canonical(1);
  std::vector<Iso<S>> t1_candidates;
  for_each_matrix(ring, f1, f1, [&](const Morphism<S>& t) {
    auto inv = invert(t);
    if (!inv) return true;
    for (const auto& v : probes) {
      auto s = detail::scalar(ring, v);
      if (!detail::same_matrix(F(s), compose(*inv, s, t))) return true;
    }
    t1_candidates.push_back(Iso<S>{t, *inv});
    return true;
  });

  for (const auto& t1 : t1_candidates) {
    NaturalIsoWitness<S> w;
    w.family.push_back(Iso<S>{identity(ring, 0), identity(ring, 0)});
    w.family.push_back(t1);
    bool ok = true;
    for (std::size_t n = 2; n <= F.cap && ok; ++n) {
      const auto fn = FreeObject::canonical(n);
      std::optional<Iso<S>> found;
      for_each_matrix(ring, fn, fn, [&](const Morphism<S>& t) {
        bool consistent = true;
        for_each_matrix(ring, f1, fn, [&](const Morphism<S>& f) {
          consistent = detail::same_matrix(F(f), compose(t1.backward, f, t));
          return consistent;
        });
        if (!consistent) return true;
        auto inv = invert(t);
        if (!inv) return true;
        for_each_matrix(ring, fn, f1, [&](const Morphism<S>& g) {
          consistent = detail::same_matrix(F(g), compose(*inv, g, t1.forward));
          return consistent;
        });
        if (!consistent) return true;
        found = Iso<S>{t, *inv};
        return false;
      });
      if (!found) ok = false;
      else w.family.push_back(*found);
    }
    if (!ok) continue;
    auto nat = check_naturality(w, F, identity_f, opt.verify);
    if (nat.passed) {
      out.witness = std::move(w);
      out.method = "exhaustive";
      out.naturality = std::move(nat);
      return out;
    }
  }
  out.method = "refuted";
  return out;
}

struct ReductionReport {
  std::size_t rank = 0;
  bool end_fixed = false;         ///< F fixes End(F_n) pointwise
  bool codiagonal_fixed = false;  ///< F(nu_0) = nu_0
  bool lhs = false;               ///< end_fixed and codiagonal_fixed
  bool rhs = false;               ///< F fixes Mor(F_1, F_n) pointwise
  Regime regime = Regime::exhaustive;
  std::uint64_t cases = 0;
  nlohmann::json witness;  ///< a moved morphism, when one side is false

  bool consistent() const { return lhs == rhs; }
};

inline nlohmann::json to_json(const ReductionReport& r) {
  nlohmann::json j{{"rank", r.rank},
                   {"end_fixed", r.end_fixed},
                   {"codiagonal_fixed", r.codiagonal_fixed},
                   {"lhs", r.lhs},
                   {"rhs", r.rhs},
                   {"consistent", r.consistent()},
                   {"regime", to_string(r.regime)},
                   {"cases", r.cases}};
  if (!r.witness.is_null()) j["witness"] = r.witness;
  return j;
}

/// Both sides of the reduction equivalence disagree: F is not a functor.
class EquivalenceViolation : public Error {
 public:
  explicit EquivalenceViolation(ReductionReport report)
      : Error("reduction equivalence violated at rank " + std::to_string(report.rank) + ": " +
              to_json(report).dump()),
        report_(std::move(report)) {}
  const ReductionReport& report() const noexcept { return report_; }

 private:
  ReductionReport report_;
};

/**
 * Evaluates "F fixes End(F_n) and nu_0" and "F fixes Mor(F_1, F_n)" and
 * throws EquivalenceViolation if they differ.
 */
template <SemiringLike S>
ReductionReport reduction_precondition_check(const BlackBoxFunctor<S>& F, std::size_t n, const VerifyOptions& opt = {}) {
  if (n == 0) throw ZeroRank("reduction check needs n >= 1");
  ReductionReport rep;
  rep.rank = n;
  Rng rng(opt.seed);
  const auto fn = FreeObject::canonical(n), f1 = FreeObject::canonical(1);
  auto fixed_on = [&](const FreeObject& a, const FreeObject& b, bool& flag, const char* what) {
    flag = true;
    auto st = sweep(F.ring, {Shape{a, b}}, opt.sweep, rng, [&](const std::vector<Morphism<S>>& t) {
      if (detail::same_matrix(F(t[0]), t[0])) return true;
      flag = false;
      if (rep.witness.is_null()) rep.witness = {{"set", what}, {"f", morphism_to_json(t[0])}};
      return false;
    });
    if (st.regime == Regime::sampled) rep.regime = Regime::sampled;
    rep.cases += st.cases;
  };
  fixed_on(fn, fn, rep.end_fixed, "End(F_n)");
  const auto nu = codiagonal(F.ring, n);
  rep.codiagonal_fixed = detail::same_matrix(F(nu), nu);
  ++rep.cases;
  if (!rep.codiagonal_fixed && rep.witness.is_null()) rep.witness = {{"set", "codiagonal"}, {"f", morphism_to_json(nu)}};
  fixed_on(f1, fn, rep.rhs, "Mor(F_1,F_n)");
  rep.lhs = rep.end_fixed && rep.codiagonal_fixed;
  if (!rep.consistent()) throw EquivalenceViolation(rep);
  return rep;
}

struct OuterGroupReport {
  std::string semiring;
  std::size_t cap = 0;
  std::size_t aut_size = 0, inn_size = 0, out_size = 0;
  std::size_t classes = 0;
  std::vector<std::vector<std::string>> class_members;  ///< automorphism names
  std::vector<std::pair<std::string, std::string>> undecided;

  bool passed() const { return undecided.empty() && classes == out_size; }
};

inline nlohmann::json to_json(const OuterGroupReport& r) {
  nlohmann::json und = nlohmann::json::array();
  for (const auto& [a, b] : r.undecided) und.push_back({a, b});
  return {{"semiring", r.semiring},      {"cap", r.cap},         {"aut", r.aut_size},
          {"inn", r.inn_size},           {"out", r.out_size},    {"classes", r.classes},
          {"members", r.class_members}, {"undecided", und},     {"passed", r.passed()}};
}

/**
 * Groups Aut(R) by inner equivalence of the induced skew-inner functors:
 * sigma_i ~ sigma_j iff skew_inner(sigma_i then sigma_j^-1) is inner up to the
 * cap. Undecided pairs leave the count as an upper bound on classes.
 */
inline OuterGroupReport outer_group_experiment(const SemiringPtr& ring, std::size_t cap, const InnerOptions& opt = {},
                                               std::size_t enumeration_cap = 1'000'000) {
  const auto& table = ring->table();
  const auto groups = automorphism_groups(table, enumeration_cap);
  OuterGroupReport rep;
  rep.semiring = ring->name();
  rep.cap = cap;
  rep.aut_size = groups.aut.size();
  rep.inn_size = groups.inn.size();
  rep.out_size = groups.out_reps.size();
  std::vector<std::size_t> parent(groups.aut.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < groups.aut.size(); ++i)
    for (std::size_t j = i + 1; j < groups.aut.size(); ++j) {
      if (find(i) == find(j)) continue;
      auto quotient = compose(table, inverse(table, groups.aut[j]), groups.aut[i]);
      auto F = semi_inner_functor(skew_inner_functor(ring, quotient, cap));
      try {
        if (inner_witness(F, opt).witness) parent[find(j)] = find(i);
      } catch (const SearchCapExceeded&) {
        rep.undecided.emplace_back(groups.aut[i].name, groups.aut[j].name);
      }
    }
  std::vector<std::vector<std::string>> members(groups.aut.size());
  for (std::size_t i = 0; i < groups.aut.size(); ++i) members[find(i)].push_back(groups.aut[i].name);
  for (auto& m : members)
    if (!m.empty()) rep.class_members.push_back(std::move(m));
  rep.classes = rep.class_members.size();
  return rep;
}

}  // namespace semicat
