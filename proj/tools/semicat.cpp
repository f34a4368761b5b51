// semicat: command-line front end. Exit codes: 0 pass, 1 check failure, 2 config/parse error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "semicat/harness/run.hpp"
#include "semicat/lie/semimorphism.hpp"

using namespace semicat;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  std::size_t cap = 2;
  std::string format = "json";
  std::string out;
  bool timing = false;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(g.out, text);
  }
}

int emit_report_and_code(const Globals& g, const Report& r) {
  emit(g, emit_report(r, parse_format(g.format), g.timing));
  return r.exit_code();
}

/// Plain results (no checks): JSON object or "key: value" lines.
int emit_results(const Globals& g, const nlohmann::json& j) {
  if (parse_format(g.format) == ReportFormat::json) {
    emit(g, j.dump(2) + "\n");
  } else {
    std::ostringstream s;
    for (const auto& [k, v] : j.items()) {
      s << k << ":";
      if (v.is_array()) {
        s << "\n";
        for (const auto& x : v) s << "  " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
      } else {
        s << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
    emit(g, s.str());
  }
  return 0;
}

ExperimentConfig base_config(const Globals& g, ExperimentKind kind, const std::string& input) {
  ExperimentConfig c;
  c.kind = kind;
  c.input = input;
  c.cap = g.cap;
  c.seed = g.seed;
  c.budget = g.budget;
  if (!g.out.empty()) c.output = g.out;
  return c;
}

int run(const Globals& g, const ExperimentConfig& c) { return emit_report_and_code(g, run_experiment(c)); }

nlohmann::json functor_spec(const std::string& file, const std::string& sigma) {
  nlohmann::json spec;
  if (!file.empty()) spec = read_json_file(file);
  if (!sigma.empty()) {
    if (spec.is_null()) spec = nlohmann::json::object();
    spec["sigma"] = sigma;
  }
  return spec;
}

LieSemiMorphism parse_images(const LieAlgebra& L, const std::string& text, unsigned frobenius) {
  LieSemiMorphism t;
  t.delta.power = frobenius;
  std::stringstream ss(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ',')) {
    const auto u = parse_pbw(item, L);
    if (pbw_degree(u).value_or(0) > 1 || u.terms.count(Exponents(L.dim(), 0)))
      throw ParseError("images[" + std::to_string(i) + "]", "'" + item + "' is not a linear element of L");
    t.images.push_back(pbw_linear_part(L, u));
    ++i;
  }
  if (t.images.size() != L.dim())
    throw ParseError("images", "expected " + std::to_string(L.dim()) + " comma-separated images");
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semicat: semirings, matrix categories, automorphisms, enveloping algebras"};
  app.set_version_flag("--version", SEMICAT_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "seed for every sampled check")->capture_default_str();
  app.add_option("--budget", g.budget, "enumeration or sample budget (module default if unset)");
  app.add_option("--cap", g.cap, "rank cap")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "json or text")->capture_default_str()->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", g.out, "write output here instead of stdout");
  app.add_flag("--timing", g.timing, "include per-check timing");

  std::string input, functor_file, sigma, lie_file, expr, images, config_file, replay_file, replay_check, show_file;
  std::size_t degree_cap = 2, generators = 1, n = 1, m = 2;
  unsigned frobenius = 0;
  bool restricted = false;

  // semiring
  auto* semiring = app.add_subcommand("semiring", "semiring tables and automorphisms");
  semiring->require_subcommand(1);
  auto* s_validate = semiring->add_subcommand("validate", "check every axiom");
  s_validate->add_option("input", input, "built-in name or JSON file")->required();
  auto* s_autos = semiring->add_subcommand("autos", "Aut, Inn and Out representatives");
  s_autos->add_option("input", input)->required();
  auto* s_show = semiring->add_subcommand("show", "print the Cayley tables");
  s_show->add_option("input", input)->required();

  // ibn
  auto* ibn = app.add_subcommand("ibn", "invariant basis number");
  ibn->require_subcommand(1);
  auto* i_classify = ibn->add_subcommand("classify", "IBNUpTo(cap) or the first Type(n,h)");
  i_classify->add_option("input", input)->required();
  auto* i_witness = ibn->add_subcommand("witness", "search for F_n ~ F_m");
  i_witness->add_option("input", input)->required();
  i_witness->add_option("-n", n)->capture_default_str()->check(CLI::PositiveNumber);
  i_witness->add_option("-m", m)->capture_default_str()->check(CLI::PositiveNumber);

  // autmorph
  auto* aut = app.add_subcommand("autmorph", "automorphisms of the matrix category");
  aut->require_subcommand(1);
  auto functor_opts = [&](CLI::App* c) {
    c->add_option("input", input, "semiring")->required();
    c->add_option("--functor", functor_file, "functor spec JSON");
    c->add_option("--sigma", sigma, "automorphism name for a skew-inner functor");
  };
  auto* a_verify = aut->add_subcommand("verify", "check the functor laws");
  functor_opts(a_verify);
  auto* a_extract = aut->add_subcommand("extract", "recover sigma from an injection-fixing functor");
  functor_opts(a_extract);
  auto* a_normalize = aut->add_subcommand("normalize", "conjugate a functor so it fixes injections");
  functor_opts(a_normalize);
  auto* a_outgroup = aut->add_subcommand("outgroup", "classes of skew-inner functors modulo inner ones");
  a_outgroup->add_option("input", input)->required();

  // lie
  auto* lie = app.add_subcommand("lie", "Lie algebras and enveloping algebras");
  lie->require_subcommand(1);
  auto lie_opts = [&](CLI::App* c) {
    c->add_option("--file", lie_file, "Lie file, or sl2:<K>, heisenberg:<K>, abelian<d>:<K>")->required();
    c->add_option("--degree-cap", degree_cap, "PBW degree cap")->capture_default_str()->check(CLI::PositiveNumber);
  };
  auto* l_validate = lie->add_subcommand("validate", "antisymmetry, Jacobi, and p-map axioms");
  lie_opts(l_validate);
  auto* l_mul = lie->add_subcommand("mul", "normal form of a product");
  lie_opts(l_mul);
  l_mul->add_option("--expr", expr, "e.g. \"e*f - f*e\"")->required();
  l_mul->add_flag("--restricted", restricted, "reduce in U_p using the file's p-map");
  auto* l_basis = lie->add_subcommand("basis", "free-module basis up to the degree cap");
  lie_opts(l_basis);
  l_basis->add_option("--generators", generators)->capture_default_str()->check(CLI::PositiveNumber);
  l_basis->add_flag("--restricted", restricted, "exponents below p");
  auto* l_lift = lie->add_subcommand("lift", "lift a semi-automorphism of L to U(L)");
  lie_opts(l_lift);
  l_lift->add_option("--images", images, "comma-separated images of the basis, e.g. \"e,-h,f\"")->required();
  l_lift->add_option("--frobenius", frobenius, "coefficient automorphism x -> x^(p^k)")->capture_default_str();
  auto* l_units = lie->add_subcommand("units", "units of U(L) as 1x1 automorphisms");
  lie_opts(l_units);
  auto* l_suite = lie->add_subcommand("suite", "every Lie check");
  lie_opts(l_suite);

  // report
  auto* rep = app.add_subcommand("report", "run a config file, replay a failure, or re-render a report");
  rep->add_option("config", config_file, "experiment config JSON");
  rep->add_option("--replay", replay_file, "saved JSON report to replay from");
  rep->add_option("--check", replay_check, "index or name of the check to replay (default: first failure)");
  rep->add_option("--show", show_file, "saved JSON report to re-render");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (s_validate->parsed()) return run(g, base_config(g, ExperimentKind::validate, input));
    if (s_autos->parsed()) return run(g, base_config(g, ExperimentKind::aut_groups, input));
    if (s_show->parsed()) {
      auto r = make_semiring(input);
      return emit_results(g, semiring_to_json(r->table()));
    }
    if (i_classify->parsed()) return run(g, base_config(g, ExperimentKind::ibn, input));
    if (i_witness->parsed()) {
      auto r = make_semiring(input);
      IbnSearchOptions opt;
      if (g.budget) opt.cap = *g.budget;
      auto a = free_iso_witness_detailed(r, n, m, opt);
      nlohmann::json j{{"semiring", r->name()}, {"n", n}, {"m", m}, {"regime", to_string(a.regime)}};
      j["isomorphic"] = a.witness.has_value();
      if (a.witness) {
        j["A"] = render_literal(a.witness->a);
        j["B"] = render_literal(a.witness->b);
      }
      return emit_results(g, j);
    }
    if (a_verify->parsed()) {
      auto c = base_config(g, ExperimentKind::functor_verify, input);
      c.functor = functor_spec(functor_file, sigma);
      return run(g, c);
    }
    if (a_extract->parsed() || a_normalize->parsed()) {
      auto ring = make_semiring(input);
      auto F = functor_from_spec(ring, functor_spec(functor_file, sigma), g.cap);
      VerifyOptions vo;
      if (g.budget) vo.sweep.budget = *g.budget;
      vo.seed = g.seed;
      if (a_extract->parsed()) {
        auto s = extract_sigma_automorphism(F, {vo});
        return emit_results(g, {{"functor", F.name}, {"sigma", s.name}, {"permutation", s.permutation}});
      }
      Report r;
      auto c = base_config(g, ExperimentKind::functor_verify, input);
      c.functor = functor_spec(functor_file, sigma);
      r.experiment = config_to_json(c);
      r.experiment["command"] = "normalize";
      r.results["functor"] = F.name;
      try {
        auto norm = normalize_injections(F);
        r.checks.push_back(check_naturality(norm.iso, F, norm.f0, vo, "naturality"));
        auto s = extract_sigma(norm.f0, {vo});
        r.results["sigma"] = to_automorphism(*ring, s).name;
        auto skew = semi_inner_functor(skew_inner_functor(ring, s, g.cap));
        r.checks.push_back(check_naturality(NaturalIsoWitness<Semiring>{skew_inner_functor(ring, ScalarMap<Semiring>{}, g.cap).family},
                                            norm.f0, skew, vo, "matches-skew-inner"));
      } catch (const ConfigError&) {
        throw;
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        CheckRecord fail{"normalize"};
        fail.fail({{"error", e.what()}}, "module error");
        r.checks.push_back(fail);
      }
      return emit_report_and_code(g, r);
    }
    if (a_outgroup->parsed()) return run(g, base_config(g, ExperimentKind::out_group, input));

    if (l_validate->parsed() || l_suite->parsed()) {
      auto c = base_config(g, ExperimentKind::lie_suite, lie_file);
      c.degree_cap = degree_cap;
      if (l_validate->parsed()) c.checks = {"lie-axioms", "restricted"};
      return run(g, c);
    }
    if (l_mul->parsed() || l_basis->parsed() || l_lift->parsed() || l_units->parsed()) {
      const auto file = load_lie_input(lie_file);
      const auto& L = file.algebra;
      if ((restricted) && !file.restricted) throw ConfigError("--restricted needs a file with a p-map");
      const auto D = static_cast<std::uint32_t>(degree_cap);
      if (l_mul->parsed()) {
        PbwElement u = restricted
                           ? parse_pbw(expr, L, [&](const PbwElement& a, const PbwElement& b) {
                               return restricted_pbw_multiply(a, b, L, *file.restricted);
                             })
                           : parse_pbw(expr, L);
        return emit_results(g, {{"algebra", L.name()}, {"expr", expr}, {"normal_form", render(u, L)}});
      }
      if (l_basis->parsed()) {
        const auto basis = restricted ? restricted_module_basis(L, file.restricted->p, generators, D)
                                      : free_module_basis(L, generators, D);
        std::vector<std::string> gens, words;
        for (std::size_t x = 0; x < generators; ++x) gens.push_back("x" + std::to_string(x + 1));
        for (const auto& b : basis) words.push_back(render(b, L.labels(), gens));
        return emit_results(g, {{"algebra", L.name()}, {"degree_cap", D}, {"count", basis.size()}, {"basis", words}});
      }
      if (l_lift->parsed()) {
        const auto theta = parse_images(L, images, frobenius);
        Report r;
        r.experiment = {{"command", "lie lift"}, {"file", lie_file}, {"images", images}, {"frobenius", frobenius},
                        {"degree_cap", D}, {"seed", g.seed}};
        try {
          auto lifted = lift_semi_automorphism(L, theta, {D, 100, g.seed});
          r.checks = lifted.checks;
          r.checks.push_back(lift_multiplicative_on_monomials(L, lifted, std::max<std::uint32_t>(1, D / 2)));
          std::vector<std::string> inv;
          for (const auto& x : lifted.inverse_theta.images) inv.push_back(L.render(x));
          r.results["inverse_images"] = inv;
        } catch (const Error& e) {
          CheckRecord fail{"semi-automorphism"};
          fail.fail({{"error", e.what()}}, "not a semi-automorphism of L");
          r.checks.push_back(fail);
        }
        return emit_report_and_code(g, r);
      }
      CyclicUnitsOptions opt;
      opt.seed = g.seed;
      auto u = cyclic_aut_check(L, D, opt);
      emit(g, parse_format(g.format) == ReportFormat::json ? to_json(u).dump(2) + "\n"
                                                          : "units: " + nlohmann::json(u.units).dump() +
                                                                (u.passed() ? "\nverdict: pass\n" : "\nverdict: fail\n"));
      return u.passed() ? 0 : 1;
    }

    if (rep->parsed()) {
      if (!show_file.empty()) {
        auto r = report_from_json(read_json_file(show_file));
        return emit_report_and_code(g, r);
      }
      if (!replay_file.empty()) {
        auto saved = report_from_json(read_json_file(replay_file));
        std::optional<std::size_t> idx;
        for (std::size_t i = 0; i < saved.checks.size() && !idx; ++i) {
          const auto& c = saved.checks[i];
          if (replay_check.empty() ? !c.passed : (c.name == replay_check || std::to_string(i) == replay_check)) idx = i;
        }
        if (!idx) throw ConfigError("no matching check to replay");
        return run(g, replay_config(saved, *idx));
      }
      if (config_file.empty()) throw ConfigError("report needs a config file, --replay or --show");
      auto c = load_config_file(config_file);
      if (c.output && g.out.empty()) g.out = *c.output;
      return run(g, c);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
