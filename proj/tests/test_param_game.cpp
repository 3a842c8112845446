#include <gtest/gtest.h>

#include "kohlberg_display.hpp"
#include "support.hpp"

using namespace zsg;
using zsg::fixture::Gen;

TEST(BuildW, SingleEntryGame) {
  NormalizedGame g = normalize(fixture::one_state(MatrixGame{{Rational(1)}}));
  for (Rational lambda : {Rational(1), Rational(1, 3)})
    for (Rational z : {Rational(0), Rational(1, 4), Rational(1)}) {
      WMatrix w = build_W(g, lambda, z, 0);
      ASSERT_EQ(w.matrix.rows(), 1u);
      EXPECT_EQ(w.matrix(0, 0), lambda * (1 - z));
      EXPECT_EQ(val_W(g, lambda, z, 0), lambda * (1 - z));
    }
  EXPECT_EQ(val_W(g, Rational(1, 5), Rational(1), 0), 0);
}

TEST(BuildW, Labels) {
  NormalizedGame g = normalize(fixture::corpus_game("kohlberg"));
  WMatrix w = build_W(g, Rational(1, 2), Rational(1, 3), 0);
  ASSERT_EQ(w.row_profiles.size(), 4u);
  EXPECT_EQ(w.row_profiles[1].to_string(), "(1,2,1,1)");
  EXPECT_EQ(w.col_profiles[2].to_string(), "(2,1,1,1)");
  EXPECT_EQ(w.lambda, Rational(1, 2));
  EXPECT_EQ(w.z, Rational(1, 3));
  EXPECT_THROW(build_W(g, Rational(1, 2), Rational(0), 4), InputError);
  EXPECT_THROW(build_W(g, Rational(0), Rational(0), 0), InputError);
}

TEST(ValW, PenniesRootAtHalf) {
  NormalizedGame g = normalize(fixture::corpus_game("pennies"));
  for (Rational lambda : {Rational(1), Rational(1, 2), Rational(1, 7)}) {
    EXPECT_EQ(val_W(g, lambda, Rational(1, 2), 0), 0);
    EXPECT_GT(val_W(g, lambda, Rational(1, 4), 0), 0);
    EXPECT_LT(val_W(g, lambda, Rational(3, 4), 0), 0);
  }
}

TEST(ValW, NonnegativeAtZero) {
  Gen gen(31);
  for (int t = 0; t < 20; ++t) {
    NormalizedGame g = normalize(gen.game(2, 2, 4));
    for (const auto& row : build_W(g, Rational(1, 4), Rational(0), 0).matrix.data()) EXPECT_GE(row, 0);
    EXPECT_GE(val_W(g, Rational(1, 4), Rational(0), 0), 0);
  }
}

TEST(ValW, StrictlyDecreasing) {
  Gen gen(37);
  for (int t = 0; t < 15; ++t) {
    NormalizedGame g = normalize(gen.game(2, 2, 3));
    for (Rational lambda : {Rational(1, 2), Rational(1, 8)}) {
      WFamily fam(g, lambda, 0);
      Rational prev = fam.value(Rational(0));
      for (int k = 1; k <= 8; ++k) {
        Rational cur = fam.value(make_rational(Integer(k), Integer(8)));
        EXPECT_GT(prev, cur);
        prev = cur;
      }
    }
  }
}

TEST(ValW, EntriesFactorThroughGamma) {
  Gen gen(41);
  for (int t = 0; t < 10; ++t) {
    GameSpec spec = gen.game(3, 2, 4);
    NormalizedGame g = normalize(spec);
    const Rational lambda(1, 3), z(2, 5);
    WMatrix w = build_W(g, lambda, z, 1);
    for (std::size_t i = 0; i < w.row_profiles.size(); ++i)
      for (std::size_t j = 0; j < w.col_profiles.size(); ++j) {
        ProfileChain c = build_chain(g, w.row_profiles[i], w.col_profiles[j]);
        EXPECT_EQ(w.matrix(i, j), d0(c, lambda) * (solve_linear_gamma(c, lambda)[1] - z));
      }
  }
}

TEST(ValW, RootBracketsOracleValue) {
  Gen gen(43);
  for (int t = 0; t < 8; ++t) {
    NormalizedGame g = normalize(gen.game(2, 2, 4));
    const Rational lambda(1, 2);
    ValueIterationResult vi = value_iteration(g, lambda, make_rational(Integer(1), pow2(40)));
    const Rational v = vi.values[0];
    const Rational h = make_rational(Integer(1), pow2(20));
    EXPECT_GT(val_W(g, lambda, v - h, 0), 0);
    EXPECT_LT(val_W(g, lambda, v + h, 0), 0);
  }
}

TEST(WFamilyThreads, SameAsSequential) {
  NormalizedGame g = normalize(fixture::Gen(47).game(3, 3, 2));
  WFamily a(g, Rational(1, 4), 0, 1), b(g, Rational(1, 4), 0, 4);
  EXPECT_EQ(a.matrix(Rational(1, 3)), b.matrix(Rational(1, 3)));
}

// The matrix displayed for Kohlberg's game against build_W on the raw game.
TEST(KohlbergDisplay, FifteenEntriesMatchExactly) {
  const GameSpec raw = fixture::corpus_game("kohlberg");
  Gen gen(53);
  for (int t = 0; t < 5; ++t) {
    const Rational lambda = make_rational(Integer(gen.uniform(1, 19)), Integer(20));
    const Rational z = gen.rational(7, 11);
    const MatrixGame w = build_W(raw, lambda, z, 0).matrix;
    const MatrixGame shown = fixture::kohlberg_display(lambda, z);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        if (i == 2 && j == 2) continue;
        EXPECT_EQ(w(i, j), shown(i, j)) << "entry " << i + 1 << "," << j + 1;
      }
    EXPECT_EQ(w(2, 2), fixture::kohlberg_entry33_corrected(lambda, z));
  }
}

TEST(KohlbergDisplay, PrintedEntry33CannotBeAPayoffDeterminant) {
  // Every entry is d^k - z d^0 with d^k, d^0 independent of z; the printed
  // (3,3) entry lambda^2 (lambda (1 - z) - lambda z) has z-coefficient
  // -2 lambda^3 while d^0 = lambda^3 for that profile pair.
  const GameSpec raw = fixture::corpus_game("kohlberg");
  const Rational lambda(1, 3);
  const Rational slope_shown =
      fixture::kohlberg_display(lambda, Rational(1))(2, 2) - fixture::kohlberg_display(lambda, Rational(0))(2, 2);
  WFamily fam(raw, lambda, 0);
  EXPECT_EQ(fam.d0(2, 2), lambda * lambda * lambda);
  EXPECT_NE(slope_shown, -fam.d0(2, 2));
  EXPECT_EQ(slope_shown, -2 * fam.d0(2, 2));
}
