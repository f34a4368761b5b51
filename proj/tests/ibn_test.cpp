#include <gtest/gtest.h>

#include "semicat/ibn/classify.hpp"
#include "semicat/semiring/io.hpp"

using namespace semicat;
using M = Morphism<Semiring>;

namespace {

// Oracle: every (A, B) pair, no pruning.
bool brute_force_isomorphic(const SemiringPtr& r, std::size_t n, std::size_t m) {
  bool found = false;
  for_each_matrix(r, n, m, [&](const M& a) {
    for_each_matrix(r, m, n, [&](const M& b) {
      found = are_inverse(a, b);
      return !found;
    });
    return !found;
  });
  return found;
}

M block_diagonal(const M& x, const M& y) {
  const auto& r = x.ring();
  std::vector<SemiringValue> e((x.rows() + y.rows()) * (x.cols() + y.cols()), r->zero());
  const std::size_t cols = x.cols() + y.cols();
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) e[i * cols + j] = x.at(i, j);
  for (std::size_t i = 0; i < y.rows(); ++i)
    for (std::size_t j = 0; j < y.cols(); ++j) e[(x.rows() + i) * cols + x.cols() + j] = y.at(i, j);
  return M(r, x.rows() + y.rows(), cols, std::move(e));
}

}  // namespace

TEST(FreeIsoWitness, BooleanOneTwoIsNone) {
  auto b = builtin_semiring("boolean");
  auto ans = free_iso_witness_detailed(b, 1, 2, {.shortcuts = false});
  EXPECT_FALSE(ans.witness);
  EXPECT_EQ(ans.regime, IbnRegime::exhaustive);
  EXPECT_EQ(ans.candidates, 4u);
}

TEST(FreeIsoWitness, BooleanExhaustiveMatchesBruteForce) {
  auto b = builtin_semiring("boolean");
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t m = 1; m <= 3; ++m) {
      if (n == m) continue;
      auto ans = free_iso_witness(b, n, m, {.shortcuts = false});
      EXPECT_FALSE(ans);
      if (n * m <= 6) EXPECT_FALSE(brute_force_isomorphic(b, n, m));
    }
}

TEST(FreeIsoWitness, IdentityOnEqualRanks) {
  auto z4 = builtin_semiring("zmod:4");
  auto w = free_iso_witness(z4, 3, 3);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->a, identity(z4, 3));
  EXPECT_EQ(w->b, identity(z4, 3));
}

TEST(FreeIsoWitness, TrivialSemiringHasWitness) {
  auto t = builtin_semiring("trivial");
  auto w = free_iso_witness(t, 1, 2);
  ASSERT_TRUE(w);
  EXPECT_TRUE(are_inverse(w->a, w->b));
  EXPECT_TRUE(brute_force_isomorphic(t, 1, 2));
}

TEST(FreeIsoWitness, ShortcutAgreesWithExhaustive) {
  for (const auto* name : {"boolean", "zmod:2", "zmod:3", "trivial"}) {
    auto r = builtin_semiring(name);
    for (std::size_t n = 1; n <= 2; ++n)
      for (std::size_t m = 1; m <= 2; ++m) {
        auto fast = free_iso_witness(r, n, m);
        auto slow = free_iso_witness(r, n, m, {.shortcuts = false});
        EXPECT_EQ(fast.has_value(), slow.has_value()) << name << " " << n << "," << m;
        EXPECT_EQ(slow.has_value(), brute_force_isomorphic(r, n, m)) << name;
      }
  }
}

TEST(FreeIsoWitness, InfiniteCarriers) {
  for (const auto* name : {"naturals", "integers", "tropical"}) {
    auto r = builtin_semiring(name);
    auto ans = free_iso_witness_detailed(r, 1, 2);
    EXPECT_FALSE(ans.witness);
    EXPECT_EQ(ans.regime, IbnRegime::homomorphism);
    EXPECT_THROW(free_iso_witness(r, 1, 2, {.shortcuts = false}), SearchCapExceeded);
  }
}

TEST(FreeIsoWitness, CapExceeded) {
  auto r = builtin_semiring("trivial*trivial");
  EXPECT_NO_THROW(free_iso_witness(r, 2, 3));
  EXPECT_THROW(free_iso_witness(builtin_semiring("zmod:3"), 2, 3, {.cap = 1000, .shortcuts = false}),
               SearchCapExceeded);
}

TEST(ClassifyType, Examples) {
  auto t = classify_type(builtin_semiring("trivial"), 3);
  EXPECT_FALSE(t.ibn);
  EXPECT_EQ(t.n, 1u);
  EXPECT_EQ(t.h, 1u);
  EXPECT_EQ(t.label(), "Type(1,1)");
  ASSERT_TRUE(t.witness);
  EXPECT_TRUE(are_inverse(t.witness->a, t.witness->b));

  auto z2 = classify_type(builtin_semiring("zmod:2"), 4);
  EXPECT_TRUE(z2.ibn);
  EXPECT_EQ(z2.label(), "IBNUpTo(4)");

  auto b = classify_type(builtin_semiring("boolean"), 3, {.shortcuts = false});
  EXPECT_TRUE(b.ibn);
  EXPECT_EQ(b.cap, 3u);
  EXPECT_THROW(classify_type(builtin_semiring("boolean"), 1), ConfigError);
}

TEST(ClassifyType, JsonShape) {
  auto j = classification_to_json(classify_type(builtin_semiring("trivial"), 2));
  EXPECT_EQ(j["kind"], "Type");
  EXPECT_EQ(j["witness"]["A"]["dom"], 1);
  EXPECT_EQ(j["witness"]["A"]["cod"], 2);
  EXPECT_EQ(classification_to_json(classify_type(builtin_semiring("boolean"), 2))["kind"], "IBNUpTo");
}

// Type(1,1) on the trivial semiring: F_a ~ F_b for all a, b >= 1, built by
// stacking the (1,2) witness with identities and composing.
TEST(ClassifyType, MonogenicConsistencyOnTrivial) {
  auto r = builtin_semiring("trivial");
  auto w = *free_iso_witness(r, 1, 2, {.shortcuts = false});
  auto step = [&](std::size_t a) {  // F_a -> F_{a+1}
    if (a == 1) return IsoWitness<Semiring>{w.a, w.b};
    return IsoWitness<Semiring>{block_diagonal(w.a, identity(r, a - 1)), block_diagonal(w.b, identity(r, a - 1))};
  };
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = a; b <= 5; ++b) {
      auto fwd = identity(r, a), back = identity(r, a);
      for (std::size_t k = a; k < b; ++k) {
        auto s = step(k);
        fwd = compose(fwd, s.a);
        back = compose(s.b, back);
      }
      EXPECT_TRUE(are_inverse(fwd, back)) << a << "," << b;
    }
}

TEST(LeftRightIbn, Agreement) {
  auto b = left_right_ibn_agree(builtin_semiring("boolean"), 3, {.shortcuts = false});
  EXPECT_TRUE(b.agree);
  EXPECT_TRUE(b.left.ibn);
  auto t = left_right_ibn_agree(builtin_semiring("trivial"), 3);
  EXPECT_TRUE(t.agree);
  EXPECT_FALSE(t.right.ibn);
  auto ut = Semiring::finite(validate_semiring(upper_triangular_tables(builtin_semiring("boolean")->table(), 2)));
  EXPECT_TRUE(left_right_ibn_agree(ut, 3).agree);
  EXPECT_TRUE(left_right_ibn_agree(builtin_semiring("tropical"), 3).agree);
}
