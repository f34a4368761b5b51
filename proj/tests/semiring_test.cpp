#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "semicat/semiring/automorphisms.hpp"
#include "semicat/semiring/axioms.hpp"
#include "semicat/semiring/io.hpp"
#include "semicat/semiring/semiring.hpp"
#include "semiring_oracle.hpp"

using namespace semicat;

namespace {

using namespace oracle;

SemiringTables tables_of(const std::string& name) { return builtin_semiring(name)->table().tables(); }

}  // namespace

TEST(ValidateSemiring, AcceptsBoolean) {
  auto s = validate_semiring(boolean_tables());
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.add(1, 1), 1u);
}

TEST(ValidateSemiring, BooleanWithBrokenUnitFailsOneIdentity) {
  auto t = boolean_tables();
  t.mul[1][1] = 0;
  try {
    validate_semiring(t);
    FAIL() << "expected AxiomViolation";
  } catch (const AxiomViolation& e) {
    EXPECT_EQ(e.axiom(), "one-identity");
    EXPECT_EQ(e.witness(), std::vector<std::uint32_t>{1});
  }
}

TEST(ValidateSemiring, Zmod4AgainstModularArithmetic) {
  auto s = validate_semiring(zmod_tables(4));
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b) {
      EXPECT_EQ(s.add(a, b), (a + b) % 4);
      EXPECT_EQ(s.mul(a, b), (a * b) % 4);
    }
  for (const auto& ax : kAxiomOrder) EXPECT_TRUE(axiom_holds_everywhere(raw(zmod_tables(4)), ax)) << ax;
}

TEST(ValidateSemiring, MalformedTablesAreOutOfRange) {
  auto t = boolean_tables();
  t.add[0][1] = 2;
  EXPECT_THROW(validate_semiring(t), IndexOutOfRange);
  t = boolean_tables();
  t.mul.pop_back();
  EXPECT_THROW(validate_semiring(t), IndexOutOfRange);
  t = boolean_tables();
  t.one = 5;
  EXPECT_THROW(validate_semiring(t), IndexOutOfRange);
}

// Every single-entry perturbation is either rejected with a witness that the
// oracle confirms (and no earlier axiom fails) or accepted with all axioms true.
TEST(ValidateSemiring, AllSingleEntryPerturbationsAgreeWithOracle) {
  for (const auto* name : {"boolean", "zmod:4", "gf:4", "zmod:3"}) {
    const auto base = tables_of(name);
    int rejected = 0;
    for (int which = 0; which < 2; ++which)
      for (long long r = 0; r < base.size; ++r)
        for (long long c = 0; c < base.size; ++c)
          for (long long v = 0; v < base.size; ++v) {
            auto t = base;
            auto& cell = which ? t.mul[r][c] : t.add[r][c];
            if (cell == v) continue;
            cell = v;
            const Raw o = raw(t);
            try {
              validate_semiring(t);
              for (const auto& ax : kAxiomOrder)
                EXPECT_TRUE(axiom_holds_everywhere(o, ax)) << name << " accepted but " << ax << " fails";
            } catch (const AxiomViolation& e) {
              ++rejected;
              EXPECT_TRUE(fails_at(o, e.axiom(), e.witness())) << name << " " << e.what();
              for (const auto& ax : kAxiomOrder) {
                if (ax == e.axiom()) break;
                EXPECT_TRUE(axiom_holds_everywhere(o, ax)) << "earlier axiom " << ax << " also fails";
              }
            }
          }
    EXPECT_GT(rejected, 0) << name;
  }
}

TEST(ValidateSemiring, CatalogBuildersValidate) {
  for (const auto* name : {"boolean", "trivial", "zmod:1", "zmod:4", "zmod:6", "gf:2", "gf:4",
                           "gf:8", "gf:9", "zmod:2*zmod:2", "boolean*zmod:3"})
    EXPECT_NO_THROW(builtin_semiring(name)) << name;
  EXPECT_NO_THROW(validate_semiring(upper_triangular_tables(validate_semiring(boolean_tables()), 2)));
}

TEST(ValidateSemiring, FiniteFieldsHaveInverses) {
  for (long long q : {4, 8, 9, 16, 25, 27}) {
    auto r = builtin_semiring("gf:" + std::to_string(q));
    const auto& t = r->table();
    for (std::uint32_t a = 1; a < q; ++a) {
      int inverses = 0;
      for (std::uint32_t b = 1; b < q; ++b) inverses += t.mul(a, b) == t.one();
      EXPECT_EQ(inverses, 1) << "gf:" << q << " element " << a;
    }
  }
  auto f4 = builtin_semiring("gf:4");
  // alpha = 2, alpha^2 = alpha + 1 = 3.
  EXPECT_EQ(f4->table().mul(2, 2), 3u);
  EXPECT_EQ(f4->table().add(2, 1), 3u);
}

TEST(ValidateSemiring, InfiniteBuiltinsPassSampledAxioms) {
  for (const auto* name : {"naturals", "integers", "tropical"}) {
    Rng rng(7);
    auto r = builtin_semiring(name);
    EXPECT_FALSE(sampled_axiom_failure(*r, rng, 300).has_value()) << name;
  }
}

TEST(ValidateSemiring, TropicalArithmetic) {
  auto t = builtin_semiring("tropical");
  auto three = t->parse("3"), half = t->parse("1/2"), bottom = t->parse("bottom");
  EXPECT_EQ(t->render(t->add(three, half)), "3");
  EXPECT_EQ(t->render(t->mul(three, half)), "7/2");
  EXPECT_EQ(t->render(t->add(bottom, half)), "1/2");
  EXPECT_EQ(t->render(t->mul(bottom, half)), "bottom");
  EXPECT_EQ(t->render(t->one()), "0");
}

TEST(Units, CatalogValues) {
  auto names = [](const SemiringPtr& r) {
    std::vector<std::string> out;
    for (const auto& u : units_of(*r)) out.push_back(r->render(u));
    return out;
  };
  EXPECT_EQ(names(builtin_semiring("boolean")), (std::vector<std::string>{"1"}));
  EXPECT_EQ(names(builtin_semiring("zmod:4")), (std::vector<std::string>{"1", "3"}));
  EXPECT_EQ(names(builtin_semiring("naturals")), (std::vector<std::string>{"1"}));
  EXPECT_EQ(names(builtin_semiring("integers")), (std::vector<std::string>{"-1", "1"}));
  EXPECT_EQ(names(builtin_semiring("gf:5")).size(), 4u);
  EXPECT_THROW(units_of(*builtin_semiring("tropical")), UnsupportedCarrier);
}

TEST(Units, FormAGroup) {
  for (const auto* name : {"zmod:4", "zmod:12", "gf:9", "zmod:2*zmod:3"}) {
    auto r = builtin_semiring(name);
    auto us = units_of(*r);
    std::set<std::uint32_t> idx;
    for (const auto& u : us) idx.insert(std::get<FiniteElement>(u).index);
    for (const auto& u : us) {
      auto inv = r->inverse(u);
      ASSERT_TRUE(inv);
      EXPECT_TRUE(idx.count(std::get<FiniteElement>(*inv).index));
      for (const auto& v : us) EXPECT_TRUE(idx.count(std::get<FiniteElement>(r->mul(u, v)).index));
    }
  }
  // Noncommutative: units of upper-triangular 2x2 over Z_2.
  auto ut = Semiring::finite(validate_semiring(upper_triangular_tables(builtin_semiring("zmod:2")->table(), 2)));
  EXPECT_EQ(units_of(*ut).size(), 2u);
}

TEST(AutomorphismGroups, Boolean) {
  auto g = automorphism_groups(builtin_semiring("boolean")->table());
  ASSERT_EQ(g.aut.size(), 1u);
  EXPECT_TRUE(g.aut[0].is_identity());
  EXPECT_EQ(g.out_reps.size(), 1u);
}

TEST(AutomorphismGroups, GF4HasIdentityAndSquaring) {
  const auto f4 = builtin_semiring("gf:4");
  const auto& r = f4->table();
  auto g = automorphism_groups(r);
  ASSERT_EQ(g.aut.size(), 2u);
  EXPECT_TRUE(g.aut[0].is_identity());
  EXPECT_EQ(g.aut[1].permutation, (std::vector<std::uint32_t>{0, 1, 3, 2}));
  EXPECT_EQ(g.aut[1].name, "power:2");
  EXPECT_EQ(g.inn.size(), 1u);
  EXPECT_EQ(g.out_reps.size(), 2u);
}

TEST(AutomorphismGroups, FieldAutomorphismCountsAreDegrees) {
  EXPECT_EQ(automorphism_groups(builtin_semiring("gf:8")->table()).aut.size(), 3u);
  EXPECT_EQ(automorphism_groups(builtin_semiring("gf:9")->table()).aut.size(), 2u);
  EXPECT_EQ(automorphism_groups(builtin_semiring("gf:5")->table()).aut.size(), 1u);
  EXPECT_EQ(automorphism_groups(builtin_semiring("zmod:2*zmod:2")->table()).aut.size(), 2u);
}

TEST(AutomorphismGroups, EnumerationCap) {
  EXPECT_THROW(automorphism_groups(builtin_semiring("gf:9")->table(), 100), SizeLimitExceeded);
}

TEST(AutomorphismGroups, GroupStructureAndNormality) {
  std::vector<FiniteSemiring> rings;
  for (const auto* name : {"gf:4", "gf:8", "zmod:2*zmod:2", "zmod:6"}) rings.push_back(builtin_semiring(name)->table());
  rings.push_back(validate_semiring(upper_triangular_tables(builtin_semiring("zmod:2")->table(), 2)));
  for (const auto& r : rings) {
    auto g = automorphism_groups(r);
    auto contains = [](const std::vector<SemiringAutomorphism>& s, const SemiringAutomorphism& a) {
      return std::find(s.begin(), s.end(), a) != s.end();
    };
    for (const auto& a : g.aut) {
      EXPECT_TRUE(is_semiring_automorphism(r, a.permutation));
      EXPECT_TRUE(contains(g.aut, inverse(r, a)));
      for (const auto& b : g.aut) EXPECT_TRUE(contains(g.aut, compose(r, a, b)));
      for (const auto& i : g.inn) {
        EXPECT_TRUE(contains(g.aut, i));
        EXPECT_TRUE(contains(g.inn, compose(r, compose(r, a, i), inverse(r, a)))) << r.name();
      }
    }
    EXPECT_EQ(g.aut.size(), g.inn.size() * g.out_reps.size()) << r.name();
    if (r.commutative()) EXPECT_EQ(g.inn.size(), 1u);
  }
}

TEST(AutomorphismGroups, NoncommutativeHasInnerAutomorphisms) {
  auto r = validate_semiring(upper_triangular_tables(builtin_semiring("zmod:2")->table(), 2));
  auto g = automorphism_groups(r);
  EXPECT_EQ(g.inn.size(), 2u);
}

TEST(Opposite, CommutativeAndInvolution) {
  const auto z4p = builtin_semiring("zmod:4");
  const auto& z4 = z4p->table();
  EXPECT_EQ(opposite_semiring(z4), z4);
  auto ut = validate_semiring(upper_triangular_tables(builtin_semiring("boolean")->table(), 2));
  EXPECT_FALSE(ut.commutative());
  EXPECT_EQ(opposite_semiring(opposite_semiring(ut)), ut);
}

TEST(Opposite, UpperTriangularRecomputed) {
  auto ut = validate_semiring(upper_triangular_tables(builtin_semiring("boolean")->table(), 2));
  auto op = opposite_semiring(ut);
  // Independent decoding: entries (0,0),(0,1),(1,1) are bits 0,1,2.
  auto decode = [](std::uint32_t v) { return std::array<int, 3>{int(v & 1), int(v >> 1 & 1), int(v >> 2 & 1)}; };
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b) {
      auto x = decode(b), y = decode(a);  // op: a*b = b*a
      int p00 = x[0] & y[0], p01 = (x[0] & y[1]) | (x[1] & y[2]), p11 = x[2] & y[2];
      EXPECT_EQ(op.mul(a, b), std::uint32_t(p00 | p01 << 1 | p11 << 2));
      EXPECT_EQ(op.add(a, b), ut.add(a, b));
    }
}

TEST(SemiringIo, RoundTripAndErrors) {
  const auto z4p = builtin_semiring("zmod:4");
  const auto& z4 = z4p->table();
  auto j = semiring_to_json(z4);
  EXPECT_EQ(validate_semiring(semiring_tables_from_json(j)), z4);
  auto missing = j;
  missing.erase("mul");
  try {
    semiring_tables_from_json(missing);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.field(), "mul");
  }
  auto bad = j;
  bad["add"][1][0] = "x";
  try {
    semiring_tables_from_json(bad);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.field(), "add[1][0]");
  }
}

TEST(SemiringIo, MakeSemiringFromFile) {
  auto path = std::filesystem::temp_directory_path() / "semicat_z3.json";
  std::ofstream(path) << semiring_to_json(builtin_semiring("zmod:3")->table()).dump();
  auto r = make_semiring(path.string());
  EXPECT_EQ(r->finite_size(), 3u);
  EXPECT_THROW(make_semiring("no-such-semiring"), ConfigError);
  std::filesystem::remove(path);
}
