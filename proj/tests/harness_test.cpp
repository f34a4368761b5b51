#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "semicat/harness/run.hpp"

using namespace semicat;

namespace {

std::string data(const std::string& f) { return std::string(SEMICAT_DATA_DIR) + "/" + f; }

ExperimentConfig cfg(const std::string& json) { return config_from_json(nlohmann::json::parse(json)); }

const CheckRecord* find(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("semicat_harness_" + name);
  std::ofstream(p) << text;
  return p.string();
}

/// zmod:2 functor sending id_F1 to zero: breaks identity (composition still holds).
const char* broken_functor = R"({"kind": "functor-verify", "input": "zmod:2", "cap": 1,
  "functor": {"name": "broken", "overrides": [
    {"f": {"dom": 1, "cod": 1, "entries": [["1"]]}, "image": {"dom": 1, "cod": 1, "entries": [["0"]]}}]}})";

/// zmod:3 with 2 -> 1 on 1x1 matrices: multiplicative but not additive.
const char* nonadditive_functor = R"({"kind": "functor-verify", "input": "zmod:3", "cap": 1,
  "functor": {"overrides": [
    {"f": {"dom": 1, "cod": 1, "entries": [["2"]]}, "image": {"dom": 1, "cod": 1, "entries": [["1"]]}}]}})";

}  // namespace

TEST(Config, ParseAndEcho) {
  auto c = cfg(R"({"kind": "out-group", "semiring": "gf:4", "cap": 2})");
  EXPECT_EQ(c.kind, ExperimentKind::out_group);
  EXPECT_EQ(c.input, "gf:4");
  EXPECT_EQ(c.seed, 0u);
  EXPECT_EQ(config_from_json(config_to_json(c)), c);

  auto full = cfg(R"({"kind": "lie-suite", "file": "sl2:Q", "degree_cap": 3, "seed": 9, "budget": 40,
                      "output": "x.json", "checks": ["cyclic-units"]})");
  EXPECT_EQ(config_from_json(config_to_json(full)), full);
}

TEST(Config, Rejections) {
  auto field_of = [](const std::string& json) {
    try {
      cfg(json);
    } catch (const ParseError& e) {
      return e.field();
    }
    return std::string("<none>");
  };
  EXPECT_EQ(field_of(R"({"kind": "ibn", "input": "boolean", "cpa": 2})"), "cpa");
  EXPECT_EQ(field_of(R"({"kind": "nope", "input": "boolean"})"), "kind");
  EXPECT_EQ(field_of(R"({"input": "boolean"})"), "kind");
  EXPECT_EQ(field_of(R"({"kind": "ibn"})"), "input");
  EXPECT_EQ(field_of(R"({"kind": "ibn", "input": "boolean", "semiring": "boolean"})"), "input");
  EXPECT_EQ(field_of(R"({"kind": "ibn", "input": "boolean", "seed": -1})"), "seed");
  EXPECT_THROW(cfg(R"({"kind": "ibn", "input": "boolean", "cap": 0})"), ConfigError);
  EXPECT_THROW(cfg(R"({"kind": "ibn", "input": "boolean", "degree_cap": 0})"), ConfigError);
  EXPECT_THROW(cfg(R"({"kind": "ibn", "input": "boolean", "functor": {}})"), ConfigError);
  EXPECT_THROW(load_config_file(data("does_not_exist.json")), ConfigError);
}

TEST(Run, OutGroupGf4) {
  auto r = run_experiment(cfg(R"({"kind": "out-group", "semiring": "gf:4", "cap": 2})"));
  EXPECT_EQ(r.results.at("classes"), 2);
  EXPECT_EQ(r.results.at("out"), 2);
  EXPECT_EQ(r.verdict(), "pass");
}

TEST(Run, IbnBooleanAndTrivial) {
  auto b = run_experiment(cfg(R"({"kind": "ibn", "semiring": "boolean", "cap": 3})"));
  EXPECT_EQ(b.results.at("classification"), "IBNUpTo(3)");
  EXPECT_EQ(b.verdict(), "pass");

  auto t = run_experiment(cfg(R"({"kind": "ibn", "semiring": "trivial", "cap": 2})"));
  EXPECT_EQ(t.results.at("classification"), "Type(1,1)");
  ASSERT_NE(find(t, "witness-verified"), nullptr);
  EXPECT_EQ(t.verdict(), "pass");

  auto one = run_experiment(cfg(R"({"kind": "ibn", "semiring": "zmod:3", "cap": 1})"));
  EXPECT_EQ(one.results.at("classification"), "IBNUpTo(1)");
}

TEST(Run, ValidateFiles) {
  try {
    run_experiment(cfg(R"({"kind": "validate", "input": ")" + data("malformed_semiring.json") + R"("})"));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(e.field().find("mul"), std::string::npos) << e.field();
  }
  auto z4 = run_experiment(cfg(R"({"kind": "validate", "input": ")" + data("z4.json") + R"("})"));
  EXPECT_EQ(z4.verdict(), "pass");
  EXPECT_EQ(find(z4, "axioms")->cases, 64u);

  // Boolean with 1 + 1 = 0 and 1 * 1 = 0: associativity holds, one-identity fails.
  auto bad = temp_file("bad.json", R"({"name": "bad", "size": 2, "zero": 0, "one": 1,
      "add": [[0, 1], [1, 0]], "mul": [[0, 0], [0, 0]]})");
  auto r = run_experiment(cfg(R"({"kind": "validate", "input": ")" + bad + R"("})"));
  EXPECT_EQ(r.verdict(), "fail");
  EXPECT_EQ(find(r, "axioms")->witness.at("axiom"), "one-identity");
  std::remove(bad.c_str());
}

TEST(Run, ValidateBuiltins) {
  EXPECT_EQ(run_experiment(cfg(R"({"kind": "validate", "input": "gf:8"})")).verdict(), "pass");
  auto trop = run_experiment(cfg(R"({"kind": "validate", "input": "tropical", "seed": 3})"));
  const auto* c = find(trop, "axioms");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->regime, Regime::sampled);
  EXPECT_EQ(c->seed, 3u);
  EXPECT_TRUE(c->passed);
  EXPECT_THROW(run_experiment(cfg(R"({"kind": "validate", "input": "no-such-ring"})")), ConfigError);
}

TEST(Run, AutGroups) {
  auto r = run_experiment(cfg(R"({"kind": "aut-groups", "input": "gf:8"})"));
  EXPECT_EQ(r.results.at("aut").size(), 3u);
  EXPECT_EQ(r.results.at("inn").size(), 1u);
  EXPECT_EQ(r.verdict(), "pass");
  // Infinite carrier: module error embedded as a failed record.
  auto n = run_experiment(cfg(R"({"kind": "aut-groups", "input": "naturals"})"));
  EXPECT_EQ(n.verdict(), "fail");
  EXPECT_TRUE(find(n, "automorphism-groups")->witness.contains("error"));
}

TEST(Run, FunctorVerify) {
  auto id = run_experiment(cfg(R"({"kind": "functor-verify", "input": "gf:4"})"));
  EXPECT_EQ(id.results.at("functor"), "skew(identity)");
  EXPECT_EQ(id.verdict(), "pass");
  EXPECT_EQ(id.checks.size(), 6u);

  auto frob = run_experiment(cfg(R"({"kind": "functor-verify", "input": "gf:4", "functor": {"sigma": "power:2"}})"));
  EXPECT_EQ(frob.verdict(), "pass");

  auto conj = run_experiment(cfg(R"({"kind": "functor-verify", "input": "zmod:3", "cap": 2,
      "functor": {"t": {"2": {"dom": 2, "cod": 2, "entries": [["0", "1"], ["1", "0"]]}}}})"));
  EXPECT_EQ(conj.verdict(), "pass");

  // A singular T_1 is a module error, reported rather than thrown.
  auto singular = run_experiment(cfg(R"({"kind": "functor-verify", "input": "zmod:4", "cap": 1,
      "functor": {"t": {"1": {"dom": 1, "cod": 1, "entries": [["2"]]}}}})"));
  EXPECT_EQ(singular.verdict(), "fail");
  EXPECT_NE(find(singular, "functor"), nullptr);

  EXPECT_THROW(run_experiment(cfg(R"({"kind": "functor-verify", "input": "gf:4", "functor": {"sigma": "power:3"}})")),
               ConfigError);
  EXPECT_THROW(run_experiment(cfg(R"({"kind": "functor-verify", "input": "gf:4", "functor": {"sigma": [0, 1, 3, 2, 0]}})")),
               ConfigError);
}

TEST(Run, BrokenFunctorFailsAndReplays) {
  for (const char* json : {broken_functor, nonadditive_functor}) {
    auto r = run_experiment(cfg(json));
    ASSERT_EQ(r.verdict(), "fail");
    std::size_t replayed = 0;
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
      if (r.checks[i].passed) continue;
      auto single = replay_config(r, i);
      auto again = run_experiment(single);
      ASSERT_EQ(again.checks.size(), 1u) << r.checks[i].name;
      EXPECT_FALSE(again.checks[0].passed) << r.checks[i].name;
      // The replay config itself survives a JSON round trip.
      EXPECT_EQ(emit_report(run_experiment(config_from_json(config_to_json(single))), ReportFormat::json),
                emit_report(again, ReportFormat::json));
      ++replayed;
    }
    EXPECT_GE(replayed, 1u);
  }
  EXPECT_FALSE(find(run_experiment(cfg(broken_functor)), "identity")->passed);
  auto na = run_experiment(cfg(nonadditive_functor));
  EXPECT_FALSE(find(na, "additivity")->passed);
  EXPECT_TRUE(find(na, "composition")->passed);
}

TEST(Run, ReplayOfPassingCheckPasses) {
  auto r = run_experiment(cfg(broken_functor));
  const auto* ok = find(r, "zero");
  ASSERT_TRUE(ok && ok->passed);
  // A passing record has no witness; the replay reruns that check alone.
  std::size_t idx = static_cast<std::size_t>(ok - r.checks.data());
  auto again = run_experiment(replay_config(r, idx));
  ASSERT_EQ(again.checks.size(), 1u);
  EXPECT_TRUE(again.checks[0].passed);
}

TEST(Run, LieSuite) {
  auto q = run_experiment(cfg(R"({"kind": "lie-suite", "input": "sl2:Q"})"));
  EXPECT_EQ(q.verdict(), "pass") << emit_report(q, ReportFormat::text);
  EXPECT_EQ(q.results.at("dim"), 3);

  auto z = run_experiment(cfg(R"({"kind": "lie-suite", "input": ")" + data("sl2_z.json") + R"("})"));
  EXPECT_EQ(z.verdict(), "pass");
  EXPECT_EQ(z.results.at("unit_count"), 2);

  auto f5 = run_experiment(cfg(R"({"kind": "lie-suite", "input": ")" + data("sl2_f5_restricted.json") + R"("})"));
  EXPECT_EQ(f5.verdict(), "pass") << emit_report(f5, ReportFormat::text);
  EXPECT_NE(find(f5, "restricted:axiom-2"), nullptr);
  EXPECT_EQ(f5.results.at("unit_count"), 4);

  auto bad = run_experiment(cfg(R"({"kind": "lie-suite", "input": ")" + data("sl2_bad_jacobi.json") + R"("})"));
  EXPECT_EQ(bad.verdict(), "fail");
  EXPECT_EQ(bad.checks.size(), 1u);
  EXPECT_TRUE(find(bad, "lie-axioms")->witness.contains("triple"));
  auto again = run_experiment(replay_config(bad, 0));
  EXPECT_EQ(again.verdict(), "fail");

  auto only = run_experiment(cfg(R"({"kind": "lie-suite", "input": "heisenberg:Z", "checks": ["restricted:axiom-1", "free-basis-count"]})"));
  ASSERT_EQ(only.checks.size(), 1u);  // no p-map, and lie-axioms is filtered out
  EXPECT_EQ(only.checks[0].name, "free-basis-count");

  EXPECT_THROW(run_experiment(cfg(R"({"kind": "lie-suite", "input": "so3:Q"})")), ConfigError);
  EXPECT_THROW(run_experiment(cfg(R"({"kind": "lie-suite", "input": "sl2:zmod:6"})")), ConfigError);
}

TEST(Emit, JsonRoundTrip) {
  for (const char* json : {R"({"kind": "out-group", "input": "zmod:2*zmod:2", "cap": 2})",
                           R"({"kind": "ibn", "input": "trivial", "cap": 2})", broken_functor,
                           R"({"kind": "lie-suite", "input": "abelian2:gf:4"})"}) {
    auto r = run_experiment(cfg(json));
    auto parsed = report_from_json(nlohmann::json::parse(emit_report(r, ReportFormat::json, true)));
    EXPECT_EQ(parsed, r) << json;
    // Without timing, equality holds after dropping timings.
    auto untimed = r;
    for (auto& c : untimed.checks) c.timing_ms.reset();
    EXPECT_EQ(report_from_json(nlohmann::json::parse(emit_report(r, ReportFormat::json))), untimed);
  }
}

TEST(Emit, Determinism) {
  for (const char* json : {R"({"kind": "validate", "input": "integers", "seed": 4})",
                           R"({"kind": "aut-groups", "input": "gf:4"})",
                           R"({"kind": "functor-verify", "input": "gf:4", "cap": 2, "budget": 100, "seed": 7})",
                           R"({"kind": "lie-suite", "input": "sl2:zmod:3", "seed": 11})", broken_functor}) {
    auto a = emit_report(run_experiment(cfg(json)), ReportFormat::json);
    auto b = emit_report(run_experiment(cfg(json)), ReportFormat::json);
    EXPECT_EQ(a, b) << json;
  }
}

TEST(Emit, TextShowsWitnessLiteral) {
  auto r = run_experiment(cfg(broken_functor));
  auto text = emit_report(r, ReportFormat::text);
  EXPECT_NE(text.find("[[1]] : F1 -> F1"), std::string::npos) << text;
  EXPECT_NE(text.find("verdict: fail"), std::string::npos);
  EXPECT_NE(text.find("FAIL"), std::string::npos);
}

TEST(Emit, VacuousPass) {
  auto r = run_experiment(cfg(R"({"kind": "aut-groups", "input": "gf:4", "checks": ["nothing-by-this-name"]})"));
  EXPECT_TRUE(r.checks.empty());
  EXPECT_EQ(r.verdict(), "vacuous-pass");
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_NE(emit_report(r, ReportFormat::text).find("vacuous-pass"), std::string::npos);
  EXPECT_EQ(report_to_json(r).at("verdict"), "vacuous-pass");
}

TEST(Emit, WriteErrors) {
  EXPECT_THROW(write_text_file("/nonexistent-dir/x/report.json", "{}"), IoError);
  EXPECT_THROW(report_from_json(nlohmann::json::parse(R"({"checks": []})")), ParseError);
  EXPECT_THROW(parse_format("xml"), ConfigError);
}
