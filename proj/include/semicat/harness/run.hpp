#pragma once

/**
 * @file run.hpp
 * @brief run_experiment: dispatch a config to the owning module and collect
 * one CheckRecord per verified property.
 *
 * ConfigError and ParseError escape (bad input). Every other semicat::Error
 * raised inside a step becomes a failed record named after the step.
 */

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "semicat/autos/inner.hpp"
#include "semicat/harness/config.hpp"
#include "semicat/harness/report.hpp"
#include "semicat/ibn/classify.hpp"
#include "semicat/lie/io.hpp"
#include "semicat/lie/module.hpp"
#include "semicat/lie/units.hpp"
#include "semicat/semiring/automorphisms.hpp"
#include "semicat/semiring/axioms.hpp"

namespace semicat {

// ---------------------------------------------------------------------------
// Inputs
// ---------------------------------------------------------------------------

/// A Lie file, or sl2:<K>, heisenberg:<K>, abelian<d>:<K> with K in Z, Q, zmod:p, gf:q.
inline LieFile load_lie_input(const std::string& name) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(name, ec)) return load_lie_file(name);
  const auto colon = name.find(':');
  if (colon == std::string::npos) throw ConfigError("'" + name + "' is neither a file nor <algebra>:<ring>");
  const auto algebra = name.substr(0, colon);
  const auto K = CoefficientRing::parse_name(name.substr(colon + 1));
  if (algebra == "sl2") return {sl2(K), std::nullopt};
  if (algebra == "heisenberg") return {heisenberg(K), std::nullopt};
  if (algebra.rfind("abelian", 0) == 0) {
    std::size_t d = 0;
    try {
      d = std::stoul(algebra.substr(7));
    } catch (const std::exception&) {
      throw ConfigError("abelian needs a dimension, e.g. abelian3:Q");
    }
    if (d == 0 || d > 16) throw ConfigError("abelian dimension must be in 1..16");
    return {abelian(K, d), std::nullopt};
  }
  throw ConfigError("unknown built-in Lie algebra '" + algebra + "'");
}

namespace detail {

inline SemiringAutomorphism automorphism_from_spec(const SemiringPtr& ring, const nlohmann::json& spec) {
  if (spec.is_null() || spec == "identity") return identity_automorphism(*ring);
  if (!ring->is_finite()) throw ConfigError("only the identity automorphism is available on " + ring->name());
  const auto& table = ring->table();
  if (spec.is_array()) {
    std::vector<std::uint32_t> p;
    for (const auto& v : spec) {
      if (!v.is_number_unsigned()) throw ParseError("functor.sigma", "expected element indices");
      p.push_back(v.get<std::uint32_t>());
    }
    if (p.size() != table.size() || !is_semiring_automorphism(table, p))
      throw ConfigError("functor.sigma is not an automorphism of " + ring->name());
    return make_automorphism(table, std::move(p));
  }
  if (!spec.is_string()) throw ParseError("functor.sigma", "expected a name or a permutation");
  for (const auto& a : automorphism_groups(table).aut)
    if (a.name == spec.get<std::string>()) return a;
  throw ConfigError("no automorphism named '" + spec.get<std::string>() + "' on " + ring->name());
}

}  // namespace detail

/**
 * Functor from a spec:
 *   {"name"?, "sigma"?: "identity" | automorphism name | permutation,
 *    "t"?: {"<n>": morphism}, "overrides"?: [{"f": morphism, "image": morphism}]}
 * The base is the semi-inner functor A -> T_n^-1 sigma(A) T_m. Overrides
 * replace the image of individual morphisms, which is how a broken functor is
 * written down (and how a failure witness is replayed).
 */
inline BlackBoxFunctor<Semiring> functor_from_spec(const SemiringPtr& ring, const nlohmann::json& spec,
                                                   std::size_t cap) {
  if (!spec.is_null() && !spec.is_object()) throw ParseError("functor", "expected an object");
  auto field = [&](const char* key) { return spec.is_object() && spec.contains(key) ? spec.at(key) : nlohmann::json(); };
  const auto sigma = detail::automorphism_from_spec(ring, field("sigma"));
  std::map<std::size_t, Morphism<Semiring>> t;
  if (auto tj = field("t"); !tj.is_null()) {
    if (!tj.is_object()) throw ParseError("functor.t", "expected {\"<rank>\": morphism}");
    for (const auto& [k, m] : tj.items()) {
      std::size_t n = 0;
      try {
        n = std::stoul(k);
      } catch (const std::exception&) {
        throw ParseError("functor.t." + k, "key must be a rank");
      }
      t.emplace(n, morphism_from_json(m, ring));
    }
  }
  auto F = semi_inner_functor(make_semi_inner_data(ring, scalar_map(sigma), t, cap));
  F.name = field("name").is_string() ? field("name").get<std::string>()
                                     : (t.empty() ? "skew(" + sigma.name + ")" : "semi-inner(" + sigma.name + ")");
  if (auto ov = field("overrides"); !ov.is_null()) {
    if (!ov.is_array()) throw ParseError("functor.overrides", "expected a list");
    std::vector<std::pair<Morphism<Semiring>, Morphism<Semiring>>> table;
    for (std::size_t i = 0; i < ov.size(); ++i) {
      const auto where = "functor.overrides[" + std::to_string(i) + "]";
      if (!ov[i].is_object() || !ov[i].contains("f") || !ov[i].contains("image"))
        throw ParseError(where, "expected {\"f\": morphism, \"image\": morphism}");
      table.emplace_back(morphism_from_json(ov[i].at("f"), ring), morphism_from_json(ov[i].at("image"), ring));
    }
    auto base = F.on_morphisms;
    F.on_morphisms = [base, table](const Morphism<Semiring>& f) {
      for (const auto& [from, to] : table)
        if (detail::same_matrix(from, f)) return to;
      return base(f);
    };
  }
  return F;
}

// ---------------------------------------------------------------------------
// Runner
// ---------------------------------------------------------------------------

namespace detail {

class StepRunner {
 public:
  StepRunner(const ExperimentConfig& c, Report& r) : config_(c), report_(r) {}

  bool wanted(const std::string& step) const {
    if (config_.checks.empty()) return true;
    for (const auto& n : config_.checks)
      if (n == step || n.rfind(step + ":", 0) == 0) return true;
    return false;
  }

  /// Runs fn when the step is wanted; module errors become a failed record.
  bool run(const std::string& step, const std::function<std::vector<CheckRecord>()>& fn, bool always = false) {
    if (!always && !wanted(step)) return true;
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckRecord> recs;
    try {
      recs = fn();
    } catch (const ConfigError&) {
      throw;
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      CheckRecord c{step};
      c.fail({{"error", e.what()}}, "module error");
      recs = {c};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    bool ok = true;
    for (auto& r : recs) {
      ok = ok && r.passed;
      if (!keep(step, r.name)) continue;
      r.timing_ms = ms;
      report_.checks.push_back(std::move(r));
    }
    return ok;
  }

 private:
  bool keep(const std::string& step, const std::string& name) const {
    if (config_.checks.empty()) return true;
    for (const auto& n : config_.checks)
      if (n == step || n == name) return true;
    return false;
  }

  const ExperimentConfig& config_;
  Report& report_;
};

inline CheckRecord single(std::string name, std::uint64_t cases) {
  CheckRecord c{std::move(name)};
  c.cases = cases;
  return c;
}

inline void run_validate(const ExperimentConfig& cfg, Report& rep, StepRunner& steps) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(cfg.input, ec)) {
    const auto tables = semiring_tables_from_json(read_json_file(cfg.input));
    rep.results["semiring"] = tables.name;
    rep.results["size"] = tables.size;
    steps.run("axioms", [&] {
      CheckRecord c = single("axioms", static_cast<std::uint64_t>(tables.size * tables.size * tables.size));
      try {
        rep.results["commutative"] = validate_semiring(tables).commutative();
      } catch (const AxiomViolation& e) {
        c.fail({{"axiom", e.axiom()}, {"elements", e.witness()}}, e.what());
      }
      return std::vector<CheckRecord>{c};
    });
    return;
  }
  const auto ring = builtin_semiring(cfg.input);
  rep.results["semiring"] = ring->name();
  rep.results["size"] = ring->finite_size() ? nlohmann::json(*ring->finite_size()) : nlohmann::json(nullptr);
  rep.results["commutative"] = ring->commutative();
  steps.run("axioms", [&] {
    if (ring->is_finite()) {
      const auto n = ring->table().size();
      validate_semiring(ring->table().tables());
      return std::vector<CheckRecord>{single("axioms", n * n * n)};
    }
    CheckRecord c = single("axioms", 0);
    c.regime = Regime::sampled;
    c.seed = cfg.seed;
    Rng rng(cfg.seed);
    const std::size_t samples = cfg.budget ? static_cast<std::size_t>(*cfg.budget) : 200;
    c.cases = samples + 2;
    if (auto f = sampled_axiom_failure(*ring, rng, samples))
      c.fail({{"axiom", f->axiom}, {"elements", f->witness}}, "axiom fails on sampled values");
    return std::vector<CheckRecord>{c};
  });
}

inline void run_ibn(const ExperimentConfig& cfg, Report& rep, StepRunner& steps) {
  const auto ring = make_semiring(cfg.input);
  rep.results["semiring"] = ring->name();
  IbnSearchOptions opt;
  if (cfg.budget) opt.cap = *cfg.budget;
  if (cfg.cap < 2) {
    rep.results["classification"] = "IBNUpTo(1)";
    steps.run("classification", [] { return std::vector<CheckRecord>{single("classification", 0)}; });
    return;
  }
  steps.run("classification", [&] {
    const auto cls = classify_type(ring, cfg.cap, opt);
    rep.results["classification"] = cls.label();
    rep.results["detail"] = classification_to_json(cls);
    std::uint64_t pairs = cfg.cap * (cfg.cap - 1) / 2;
    std::vector<CheckRecord> out{single("classification", pairs)};
    if (!cls.ibn) {
      CheckRecord w = single("witness-verified", 1);
      if (!are_inverse(cls.witness->a, cls.witness->b))
        w.fail({{"A", morphism_to_json(cls.witness->a)}, {"B", morphism_to_json(cls.witness->b)}},
               "returned matrices are not mutually inverse");
      out.push_back(std::move(w));
    }
    return out;
  });
  steps.run("left-right-agreement", [&] {
    const auto lr = left_right_ibn_agree(ring, cfg.cap, opt);
    CheckRecord c = single("left-right-agreement", 2);
    if (!lr.agree)
      c.fail({{"left", lr.left.label()}, {"right", lr.right.label()}}, "R and R^op classify differently");
    return std::vector<CheckRecord>{c};
  });
}

inline void run_aut_groups(const ExperimentConfig& cfg, Report& rep, StepRunner& steps) {
  const auto ring = make_semiring(cfg.input);
  rep.results["semiring"] = ring->name();
  steps.run("automorphism-groups", [&] {
    const auto& table = ring->table();
    const auto g = automorphism_groups(table);
    auto names = [](const std::vector<SemiringAutomorphism>& v) {
      std::vector<std::string> out;
      for (const auto& a : v) out.push_back(a.name);
      return out;
    };
    rep.results["aut"] = names(g.aut);
    rep.results["inn"] = names(g.inn);
    rep.results["out"] = names(g.out_reps);
    CheckRecord valid = single("automorphisms-valid", g.aut.size());
    for (const auto& a : g.aut)
      if (!is_semiring_automorphism(table, a.permutation)) valid.fail({{"automorphism", a.name}}, "not an automorphism");
    CheckRecord sub = single("inner-subgroup", g.inn.size());
    for (const auto& a : g.inn)
      if (std::find(g.aut.begin(), g.aut.end(), a) == g.aut.end()) sub.fail({{"automorphism", a.name}}, "inner map missing from Aut");
    CheckRecord lagrange = single("coset-partition", 1);
    if (g.aut.size() != g.inn.size() * g.out_reps.size())
      lagrange.fail({{"aut", g.aut.size()}, {"inn", g.inn.size()}, {"out", g.out_reps.size()}}, "|Aut| != |Inn| * |Out|");
    return std::vector<CheckRecord>{valid, sub, lagrange};
  });
}

inline VerifyOptions verify_options(const ExperimentConfig& cfg) {
  VerifyOptions v;
  if (cfg.budget) v.sweep.budget = *cfg.budget;
  v.seed = cfg.seed;
  return v;
}

inline void run_functor_verify(const ExperimentConfig& cfg, Report& rep, StepRunner& steps) {
  const auto ring = make_semiring(cfg.input);
  rep.results["semiring"] = ring->name();
  std::optional<BlackBoxFunctor<Semiring>> F;
  const bool built = steps.run("functor", [&] {
    F = functor_from_spec(ring, cfg.functor, cfg.cap);
    return std::vector<CheckRecord>{};
  }, true);
  if (!built || !F) return;
  rep.results["functor"] = F->name;
  if (!cfg.replay.is_null()) {
    const auto original = check_from_json(cfg.replay);
    steps.run("replay:" + original.name, [&] {
      CheckRecord c = single("replay:" + original.name, 1);
      if (replay_failure(*F, original)) c.fail(original.witness, "failure reproduces: " + original.detail);
      return std::vector<CheckRecord>{c};
    }, true);
    return;
  }
  steps.run("functor-laws", [&] { return verify_functor(*F, verify_options(cfg)).checks; }, true);
}

inline void run_out_group(const ExperimentConfig& cfg, Report& rep, StepRunner& steps) {
  const auto ring = make_semiring(cfg.input);
  steps.run("outer-classes", [&] {
    InnerOptions opt;
    opt.verify = verify_options(cfg);
    if (cfg.budget) opt.search_budget = *cfg.budget;
    const auto r = outer_group_experiment(ring, cfg.cap, opt);
    rep.results = to_json(r);
    CheckRecord c = single("outer-classes", r.aut_size * (r.aut_size ? r.aut_size - 1 : 0) / 2);
    if (!r.passed())
      c.fail({{"classes", r.classes}, {"out", r.out_size}, {"undecided", r.undecided.size()}},
             r.undecided.empty() ? "class count differs from |Out(R)|" : "undecided pairs within the budget");
    return std::vector<CheckRecord>{c};
  });
}

inline void run_lie_suite(const ExperimentConfig& cfg, Report& rep, StepRunner& steps) {
  std::optional<LieFile> file;
  const bool loaded = steps.run("lie-axioms", [&] {
    try {
      file = load_lie_input(cfg.input);
    } catch (const JacobiViolation& e) {
      CheckRecord c = single("lie-axioms", 0);
      c.fail({{"triple", {e.i(), e.j(), e.k()}}, {"residual", e.residual()}}, e.what());
      return std::vector<CheckRecord>{c};
    }
    const auto d = file->algebra.dim();
    return std::vector<CheckRecord>{single("lie-axioms", d * d * d)};
  }, true);
  if (!loaded || !file) return;
  const auto& L = file->algebra;
  const auto& K = L.coefficients();
  const auto D = static_cast<std::uint32_t>(cfg.degree_cap);
  rep.results["algebra"] = L.name();
  rep.results["ring"] = K.name();
  rep.results["dim"] = L.dim();

  steps.run("pbw-associativity", [&] {
    const auto monos = monomials_up_to(L.dim(), std::max<std::uint32_t>(1, D / 2));
    CheckRecord c = single("pbw-associativity", 0);
    for (const auto& a : monos)
      for (const auto& b : monos)
        for (const auto& m : monos) {
          ++c.cases;
          auto x = pbw_monomial(L, a), y = pbw_monomial(L, b), z = pbw_monomial(L, m);
          if (c.passed && pbw_multiply(pbw_multiply(x, y, L), z, L) != pbw_multiply(x, pbw_multiply(y, z, L), L))
            c.fail({{"u", render(x, L)}, {"v", render(y, L)}, {"w", render(z, L)}}, "(uv)w != u(vw)");
        }
    return std::vector<CheckRecord>{c};
  });
  steps.run("commutator-is-bracket", [&] {
    CheckRecord c = single("commutator-is-bracket", 0);
    for (std::size_t i = 0; i < L.dim(); ++i)
      for (std::size_t j = 0; j < L.dim(); ++j) {
        ++c.cases;
        auto x = pbw_from_lie(L, L.basis(i)), y = pbw_from_lie(L, L.basis(j));
        auto comm = pbw_sub(L, pbw_multiply(x, y, L), pbw_multiply(y, x, L));
        if (comm != pbw_from_lie(L, L.basis_bracket(i, j)))
          c.fail({{"x", L.labels()[i]}, {"y", L.labels()[j]}, {"xy-yx", render(comm, L)}}, "commutator differs from bracket");
      }
    return std::vector<CheckRecord>{c};
  });
  steps.run("degree-additivity", [&] {
    CheckRecord c = single("degree-additivity", 0);
    const auto monos = monomials_up_to(L.dim(), D);
    for (const auto& a : monos)
      for (const auto& b : monos) {
        ++c.cases;
        auto u = pbw_monomial(L, a), v = pbw_monomial(L, b);
        auto uv = pbw_multiply(u, v, L);
        if (c.passed && pbw_degree(uv) != std::optional<std::uint32_t>(total_degree(a) + total_degree(b)))
          c.fail({{"u", render(u, L)}, {"v", render(v, L)}}, "deg(uv) != deg u + deg v");
      }
    return std::vector<CheckRecord>{c};
  });
  steps.run("leading-form-multiplicative", [&] {
    CheckRecord c = single("leading-form-multiplicative", 0);
    c.regime = Regime::sampled;
    c.seed = cfg.seed;
    Rng rng(cfg.seed);
    const std::size_t n = cfg.budget ? static_cast<std::size_t>(*cfg.budget) : 100;
    for (std::size_t s = 0; s < n; ++s) {
      auto u = pbw_sample(L, rng, D), v = pbw_sample(L, rng, D);
      if (u.is_zero() || v.is_zero()) continue;
      ++c.cases;
      const auto fu = filtration_and_gr(u), fv = filtration_and_gr(v), fuv = filtration_and_gr(pbw_multiply(u, v, L));
      if (c.passed && fuv.leading != commutative_multiply(fu.leading, fv.leading, K))
        c.fail({{"u", render(u, L)}, {"v", render(v, L)}}, "gr(uv) != gr(u) gr(v)");
    }
    return std::vector<CheckRecord>{c};
  });
  steps.run("free-basis-count", [&] {
    CheckRecord c = single("free-basis-count", 0);
    for (std::size_t x = 1; x <= 2; ++x) {
      ++c.cases;
      std::uint64_t want = 0;
      for (std::uint32_t k = 0; k <= D; ++k) want += x * multiset_count(L.dim(), k);
      const auto got = free_module_basis(L, x, D).size();
      if (got != want) c.fail({{"generators", x}, {"basis", got}, {"expected", want}}, "basis size differs from closed form");
    }
    return std::vector<CheckRecord>{c};
  });
  if (file->restricted)
    steps.run("restricted", [&] {
      auto r = verify_restricted(L, *file->restricted, {50, cfg.seed});
      for (auto& c : r.checks) c.name = "restricted:" + c.name;
      return r.checks;
    });
  steps.run("cyclic-units", [&] {
    CyclicUnitsOptions opt;
    opt.seed = cfg.seed;
    const auto r = cyclic_aut_check(L, std::min<std::uint32_t>(D, 2), opt);
    rep.results["units"] = r.units;
    rep.results["unit_count"] = r.count ? nlohmann::json(*r.count) : nlohmann::json(nullptr);
    CheckRecord c = single("cyclic-units", r.cases);
    c.regime = r.regime;
    c.seed = r.seed;
    if (!r.passed()) c.fail(r.witness, "unit detection disagrees with exact inverse search");
    return std::vector<CheckRecord>{c};
  });
}

}  // namespace detail

/// Deterministic given (config, seed); timing is recorded but only emitted on request.
inline Report run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
  Report rep;
  rep.experiment = config_to_json(cfg);
  ExperimentConfig effective = cfg;
  // Functor-law failures replay on their recorded morphisms; anything else
  // reruns just that check.
  if (!cfg.replay.is_null()) {
    static const std::set<std::string> laws{"object-stability", "identity", "composition",
                                            "zero",             "additivity", "biproduct"};
    const auto name = cfg.replay.at("name").get<std::string>();
    if (cfg.kind != ExperimentKind::functor_verify || !laws.count(name) || !cfg.replay.contains("witness")) {
      effective.checks = {name};
      effective.replay = nullptr;
    }
  }
  detail::StepRunner steps(effective, rep);
  switch (cfg.kind) {
    case ExperimentKind::validate: detail::run_validate(effective, rep, steps); break;
    case ExperimentKind::ibn: detail::run_ibn(effective, rep, steps); break;
    case ExperimentKind::aut_groups: detail::run_aut_groups(effective, rep, steps); break;
    case ExperimentKind::functor_verify: detail::run_functor_verify(effective, rep, steps); break;
    case ExperimentKind::out_group: detail::run_out_group(effective, rep, steps); break;
    case ExperimentKind::lie_suite: detail::run_lie_suite(effective, rep, steps); break;
  }
  return rep;
}

/// Single-case config reproducing the i-th check of a report.
inline ExperimentConfig replay_config(const Report& r, std::size_t index) {
  if (index >= r.checks.size()) throw ConfigError("report has no check #" + std::to_string(index));
  auto cfg = config_from_json(r.experiment);
  cfg.checks.clear();
  cfg.replay = to_json(r.checks[index]);
  return cfg;
}

}  // namespace semicat
