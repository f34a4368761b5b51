#include <gtest/gtest.h>

#include "semicat/matcat/biproduct.hpp"
#include "semicat/matcat/invert.hpp"
#include "semicat/matcat/io.hpp"
#include "semicat/matcat/transport.hpp"
#include "semicat/semiring/semiring.hpp"

using namespace semicat;
using M = Morphism<Semiring>;

namespace {

M mat(const SemiringPtr& r, std::size_t n, std::size_t m, std::vector<long long> v) {
  std::vector<SemiringValue> e;
  for (auto x : v) e.push_back(r->from_int(x));
  return M(r, n, m, std::move(e));
}

// Oracle: invertibility by full |R|^(n^2) enumeration.
std::optional<M> brute_inverse(const M& f) {
  std::optional<M> found;
  for_each_matrix(f.ring(), f.cod(), f.dom(), [&](const M& g) {
    if (are_inverse(f, g)) {
      found = g;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace

TEST(Compose, Examples) {
  auto b = builtin_semiring("boolean");
  EXPECT_EQ(compose(mat(b, 1, 2, {1, 1}), mat(b, 2, 1, {1, 0})), mat(b, 1, 1, {1}));
  auto z4 = builtin_semiring("zmod:4");
  EXPECT_EQ(compose(mat(z4, 1, 1, {2}), mat(z4, 1, 1, {2})), mat(z4, 1, 1, {0}));
  auto f = mat(z4, 2, 3, {1, 2, 3, 0, 1, 2});
  EXPECT_EQ(compose(f, identity(z4, 3)), f);
  EXPECT_EQ(compose(identity(z4, 2), f), f);
}

TEST(Compose, Errors) {
  auto z4 = builtin_semiring("zmod:4");
  auto b = builtin_semiring("boolean");
  EXPECT_THROW(compose(mat(z4, 1, 2, {1, 1}), mat(z4, 1, 1, {1})), DimensionMismatch);
  EXPECT_THROW(compose(mat(z4, 1, 1, {1}), mat(b, 1, 1, {1})), SemiringMismatch);
  EXPECT_THROW(add_morphisms(mat(z4, 1, 2, {1, 1}), mat(z4, 2, 1, {1, 1})), DimensionMismatch);
  EXPECT_THROW(mat(z4, 2, 2, {1}), DimensionMismatch);
}

TEST(Compose, ZeroObject) {
  auto z4 = builtin_semiring("zmod:4");
  auto to0 = M(z4, 2, 0, {});
  auto from0 = M(z4, 0, 3, {});
  EXPECT_EQ(compose(to0, from0), zero_morphism(z4, FreeObject::canonical(2), FreeObject::canonical(3)));
}

TEST(Compose, AssociativityAndIdentityExhaustiveOverBoolean) {
  auto b = builtin_semiring("boolean");
  for (std::size_t n = 0; n <= 2; ++n)
    for (std::size_t m = 0; m <= 2; ++m)
      for (std::size_t k = 0; k <= 2; ++k)
        for (std::size_t l = 0; l <= 2; ++l)
          for_each_matrix(b, n, m, [&](const M& f) {
            EXPECT_EQ(compose(identity(b, n), f), f);
            EXPECT_EQ(compose(f, identity(b, m)), f);
            for_each_matrix(b, m, k, [&](const M& g) {
              for_each_matrix(b, k, l, [&](const M& h) {
                EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
                return true;
              });
              return true;
            });
            return true;
          });
}

TEST(Compose, AssociativitySampledOverCatalog) {
  for (const auto* name : {"zmod:4", "gf:4", "naturals", "integers", "tropical", "trivial"}) {
    auto r = builtin_semiring(name);
    Rng rng(11);
    for (int t = 0; t < 1000; ++t) {
      std::size_t n = 1 + uniform_index(rng, 3), m = 1 + uniform_index(rng, 3), k = 1 + uniform_index(rng, 3),
                  l = 1 + uniform_index(rng, 3);
      auto f = sample_morphism(r, n, m, rng), g = sample_morphism(r, m, k, rng), h = sample_morphism(r, k, l, rng);
      ASSERT_EQ(compose(compose(f, g), h), compose(f, compose(g, h))) << name;
      ASSERT_EQ(compose(f, identity(r, m)), f);
    }
  }
}

TEST(AddMorphisms, ExamplesAndDistributivity) {
  auto b = builtin_semiring("boolean");
  EXPECT_EQ(add_morphisms(mat(b, 1, 2, {1, 0}), mat(b, 1, 2, {0, 1})), mat(b, 1, 2, {1, 1}));
  auto z4 = builtin_semiring("zmod:4");
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    auto f = sample_morphism(z4, 2, 2, rng), g = sample_morphism(z4, 2, 2, rng), h = sample_morphism(z4, 2, 2, rng);
    EXPECT_EQ(add_morphisms(f, zero_morphism(z4, f.dom(), f.cod())), f);
    EXPECT_EQ(compose(h, add_morphisms(f, g)), add_morphisms(compose(h, f), compose(h, g)));
    EXPECT_EQ(compose(add_morphisms(f, g), h), add_morphisms(compose(f, h), compose(g, h)));
  }
}

TEST(Biproduct, Equations) {
  auto b = builtin_semiring("boolean");
  EXPECT_THROW(biproduct_system(b, 0), ZeroRank);
  auto s1 = biproduct_system(b, 1);
  EXPECT_EQ(s1.injections[0], mat(b, 1, 1, {1}));
  EXPECT_EQ(s1.codiagonal, mat(b, 1, 1, {1}));
  auto s2 = biproduct_system(b, 2);
  EXPECT_EQ(s2.injections[0], mat(b, 1, 2, {1, 0}));
  EXPECT_EQ(s2.injections[1], mat(b, 1, 2, {0, 1}));
  auto s3 = biproduct_system(b, 3);
  EXPECT_EQ(compose(s3.injections[1], s3.codiagonal), mat(b, 1, 1, {1}));
  for (const auto* name : {"zmod:4", "gf:4", "naturals", "tropical", "trivial"})
    for (std::size_t n = 1; n <= 5; ++n) EXPECT_NO_THROW(biproduct_system(builtin_semiring(name), n));
}

TEST(Biproduct, RowSliceReconstructionOverBoolean) {
  auto b = builtin_semiring("boolean");
  for (std::size_t n = 1; n <= 2; ++n)
    for (std::size_t m = 0; m <= 2; ++m) {
      auto sys = biproduct_system(b, n);
      for_each_matrix(b, n, m, [&](const M& f) {
        auto sum = zero_morphism(b, f.dom(), f.cod());
        for (std::size_t i = 0; i < n; ++i)
          sum = add_morphisms(sum, compose(sys.projections[i], compose(sys.injections[i], f)));
        EXPECT_EQ(sum, f);
        return true;
      });
    }
}

TEST(Invert, Examples) {
  auto z2 = builtin_semiring("zmod:2");
  auto u = mat(z2, 2, 2, {1, 1, 0, 1});
  ASSERT_TRUE(invert(u));
  EXPECT_EQ(*invert(u), u);
  auto b = builtin_semiring("boolean");
  EXPECT_FALSE(invert(mat(b, 2, 2, {1, 1, 0, 1})));
  EXPECT_EQ(*invert(identity(b, 3)), identity(b, 3));
  EXPECT_EQ(*invert(mat(b, 2, 2, {0, 1, 1, 0})), mat(b, 2, 2, {0, 1, 1, 0}));
}

TEST(Invert, MatchesBruteForce) {
  for (const auto* name : {"boolean", "zmod:2", "zmod:4", "gf:4", "zmod:3"}) {
    auto r = builtin_semiring(name);
    for (std::size_t n = 0; n <= 2; ++n)
      for_each_matrix(r, n, n, [&](const M& f) {
        auto fast = invert(f);
        auto slow = brute_inverse(f);
        EXPECT_EQ(fast.has_value(), slow.has_value()) << name << " " << render_literal(f);
        if (fast && slow) EXPECT_EQ(*fast, *slow);
        return true;
      });
  }
}

TEST(Invert, InfiniteCarriers) {
  auto z = builtin_semiring("integers");
  auto p = mat(z, 2, 2, {0, -1, 1, 0});
  auto inv = invert(p);
  ASSERT_TRUE(inv);
  EXPECT_TRUE(are_inverse(p, *inv));
  EXPECT_THROW(invert(mat(z, 2, 2, {1, 1, 0, 1})), SearchCapExceeded);
  auto t = builtin_semiring("tropical");
  auto d = M(t, 2, 2, {t->parse("bottom"), t->parse("3"), t->parse("-1/2"), t->parse("bottom")});
  ASSERT_TRUE(invert(d));
  EXPECT_TRUE(are_inverse(d, *invert(d)));
}

TEST(Invert, CapExceeded) {
  auto r = builtin_semiring("zmod:5");
  EXPECT_THROW(invert(mat(r, 3, 3, {1, 1, 0, 0, 1, 1, 1, 0, 1}), 1000), SearchCapExceeded);
}

TEST(IsoFamily, CanonicalDefaultsAndMissing) {
  auto z2 = builtin_semiring("zmod:2");
  IsoFamily<Semiring> isos(z2);
  EXPECT_EQ(isos.at(FreeObject::canonical(2)).forward, identity(z2, 2));
  FreeObject a{"A", 2};
  EXPECT_THROW(isos.at(a), MissingIso);
  EXPECT_THROW(Iso<Semiring>::from(mat(z2, 2, 2, {1, 1, 1, 1})), NonInvertibleFamily);
  isos.set(a, Iso<Semiring>::from(mat(z2, 2, 2, {1, 1, 0, 1}).relabeled(a, FreeObject::canonical(2))));
  EXPECT_TRUE(isos.covers(a));
}

namespace {

BlackBoxFunctor<Semiring> entrywise(const SemiringPtr& r, std::vector<std::uint32_t> perm, std::size_t cap) {
  BlackBoxFunctor<Semiring> f;
  f.name = "entrywise";
  f.ring = r;
  f.cap = cap;
  f.on_morphisms = [perm](const M& m) {
    return map_entries(m, [&](const SemiringValue& v) {
      return SemiringValue(FiniteElement{perm[std::get<FiniteElement>(v).index]});
    });
  };
  return f;
}

}  // namespace

TEST(SkeletonTransport, TrivialIsosAndIdentity) {
  auto z2 = builtin_semiring("zmod:2");
  auto id = identity_functor(z2, 2);
  IsoFamily<Semiring> trivial(z2);
  auto ext = skeleton_transport(id, trivial);
  Rng rng(5);
  FreeObject a{"A", 2}, b{"B", 1};
  IsoFamily<Semiring> isos(z2);
  isos.set(a, Iso<Semiring>::from(mat(z2, 2, 2, {1, 1, 0, 1}).relabeled(a, FreeObject::canonical(2))));
  isos.set(b, Iso<Semiring>::from(mat(z2, 1, 1, {1}).relabeled(b, FreeObject::canonical(1))));
  auto ext2 = skeleton_transport(id, isos);
  for (int t = 0; t < 50; ++t) {
    auto f = sample_morphism(z2, 2, 1, rng);
    EXPECT_EQ(ext(f), f);
    auto g = sample_morphism(z2, a, b, rng);
    EXPECT_EQ(ext2(g), g);
  }
  EXPECT_THROW(ext2(sample_morphism(z2, FreeObject{"C", 1}, b, rng)), MissingIso);
}

// Frobenius on F_4 transported along random isos: functorial and naturally
// isomorphic to the original via eta_A = i_A ; phi(i_A^-1).
TEST(SkeletonTransport, NaturalIsoToOriginal) {
  auto f4 = builtin_semiring("gf:4");
  auto phi = entrywise(f4, {0, 1, 3, 2}, 2);
  Rng rng(17);
  FreeObject a{"A", 2}, b{"B", 1}, c{"C", 2};
  IsoFamily<Semiring> isos(f4);
  for (const auto& obj : {a, b, c}) {
    while (true) {
      auto m = sample_morphism(f4, obj, FreeObject::canonical(obj.rank), rng);
      if (auto inv = invert(m)) {
        isos.set(obj, Iso<Semiring>{m, *inv});
        break;
      }
    }
  }
  auto ext = skeleton_transport(phi, isos);
  std::vector<FreeObject> objs{a, b, c, FreeObject::canonical(1), FreeObject::canonical(2)};
  for (const auto& x : objs)
    for (const auto& y : objs)
      for_each_matrix(f4, x, y, [&](const M& f) {
        auto lhs = compose(ext(f), transport_iso_component(phi, isos, y));
        auto rhs = compose(transport_iso_component(phi, isos, x), phi(f));
        EXPECT_EQ(lhs, rhs);
        return true;
      });
  for (int t = 0; t < 300; ++t) {
    auto f = sample_morphism(f4, a, b, rng);
    auto g = sample_morphism(f4, b, c, rng);
    EXPECT_EQ(ext(compose(f, g)), compose(ext(f), ext(g)));
  }
  EXPECT_EQ(ext(identity(f4, a)), identity(f4, a));
  for_each_matrix(f4, 2, 1, [&](const M& f) {
    EXPECT_EQ(ext(f), phi(f));
    return true;
  });
}

TEST(MorphismIo, RoundTrip) {
  for (const auto* name : {"gf:4", "tropical", "integers"}) {
    auto r = builtin_semiring(name);
    Rng rng(2);
    auto f = sample_morphism(r, FreeObject{"A", 2}, FreeObject::canonical(3), rng);
    auto j = morphism_to_json(f);
    EXPECT_EQ(j["dom_label"], "A");
    EXPECT_EQ(morphism_from_json(j, r), f);
  }
  auto t = builtin_semiring("tropical");
  auto j = morphism_to_json(M(t, 1, 1, {t->zero()}));
  EXPECT_EQ(j["entries"][0][0], "bottom");
  j["entries"][0][0] = "zz";
  try {
    morphism_from_json(j, t);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.field(), "entries[0][0]");
  }
}
