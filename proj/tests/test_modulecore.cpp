#include <gtest/gtest.h>

#include "gtm/modulecore.hpp"

using gtm::Convention;
using gtm::DefiningSet;
using gtm::Scalar;

namespace {
DefiningSet sample(int N) {
  std::vector<Scalar> a, b;
  for (int i = 1; i < N; ++i) a.push_back(Scalar(i + 2));
  for (int j = 1; j + 2 <= N; ++j) b.push_back(Scalar::frac(j, 3));
  return DefiningSet(N, Convention::Standard, a, b);
}
}  // namespace

TEST(ModuleCore, PatternDetection) {
  using gtm::PatternKind;
  auto p = gtm::detect_pattern({Scalar(1), Scalar(0), Scalar(0), Scalar(2)});
  EXPECT_EQ(p.kind, PatternKind::TypeC);
  EXPECT_EQ(p.k, 2);
  EXPECT_EQ(gtm::detect_pattern({Scalar(1), Scalar(0), Scalar(3)}).kind, PatternKind::TypeB);
  EXPECT_EQ(gtm::detect_pattern({Scalar(0), Scalar(1), Scalar(0)}).kind, PatternKind::Degenerate);
  EXPECT_EQ(gtm::detect_pattern({Scalar(2), Scalar(5)}).kind, PatternKind::TypeA);
}

TEST(ModuleCore, NormalizeIsIsomorphism) {
  DefiningSet ds = sample(9);
  auto nz = gtm::normalize(ds);
  EXPECT_TRUE(nz.ds.is_normalized());
  EXPECT_EQ(gtm::apply_rescaling(ds, nz.gamma), nz.ds);
  auto w = gtm::graded_isomorphic(ds, nz.ds);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(gtm::apply_rescaling(ds, *w), nz.ds);
}

TEST(ModuleCore, NormalizeTargetsAcrossBlocks) {
  std::vector<Scalar> a{Scalar(2), Scalar(0), Scalar(3), Scalar(1)};
  std::vector<Scalar> b{Scalar(5), Scalar(7), Scalar(0)};
  DefiningSet ds(5, Convention::Tilde, a, b);
  auto nz = gtm::normalize(ds, {{1, Scalar(1)}});
  EXPECT_EQ(nz.ds.bj(1), Scalar(1));
  EXPECT_TRUE(nz.free_blocks.empty());
  EXPECT_TRUE(gtm::graded_isomorphic(ds, nz.ds).has_value());
}

TEST(ModuleCore, DualIsInvolution) {
  DefiningSet ds = sample(8);
  EXPECT_EQ(gtm::dualize(gtm::dualize(ds)), ds);
  DefiningSet c = gtm::tilde_set(7, {}, std::vector<Scalar>(5, Scalar(3)));
  DefiningSet want = gtm::tilde_set(7, {}, std::vector<Scalar>(5, Scalar(-3)));
  EXPECT_EQ(gtm::normalize(gtm::dualize(c)).ds, want);
}

TEST(ModuleCore, SubquotientWindow) {
  DefiningSet ds = sample(9);
  DefiningSet s = gtm::subquotient(ds, 3, 7);
  EXPECT_EQ(s.n_plus_1, 5);
  EXPECT_EQ(s.a(1), ds.a(3));
  EXPECT_EQ(s.bj(3), ds.bj(5));
  EXPECT_THROW(gtm::subquotient(ds, 0, 4), gtm::Error);
  EXPECT_THROW(gtm::subquotient(ds, 4, 10), gtm::Error);
}

TEST(ModuleCore, IntervalDecomposition) {
  std::vector<Scalar> b(6, Scalar(1));
  b[1] = Scalar(0);  // b_2
  b[2] = Scalar(0);  // b_3
  DefiningSet ds = gtm::tilde_set(8, {3}, b);
  auto sp = gtm::decompose(ds);
  ASSERT_TRUE(sp.has_value());
  EXPECT_EQ(sp->m, 3);
  EXPECT_TRUE(gtm::is_decomposable(ds));
  // Action of the direct sum is the block diagonal of the summands.
  auto t = ds.action(), t1 = sp->first.action(), t2 = sp->second.action();
  for (int i = 1; i < 8; ++i)
    for (int j = 1; i + j <= 8; ++j) {
      Scalar want = (j + i <= 3) ? t1.get(i, j) : (j > 3 ? t2.get(i, j - 3) : Scalar(0));
      EXPECT_EQ(t.get(i, j), want) << i << "," << j;
    }
  EXPECT_FALSE(gtm::is_decomposable(gtm::tilde_set(8, {3}, std::vector<Scalar>(6, Scalar(1)))));
}

TEST(ModuleCore, IsomorphismRejectsPatternMismatch) {
  DefiningSet x = gtm::tilde_set(6, {2}, std::vector<Scalar>(4, Scalar(1)));
  DefiningSet y = gtm::tilde_set(6, {3}, std::vector<Scalar>(4, Scalar(1)));
  EXPECT_FALSE(gtm::graded_isomorphic(x, y).has_value());
  DefiningSet z = gtm::tilde_set(6, {}, std::vector<Scalar>(4, Scalar(2)));
  DefiningSet w = gtm::tilde_set(6, {}, std::vector<Scalar>(4, Scalar(3)));
  EXPECT_FALSE(gtm::graded_isomorphic(z, w).has_value());
}
