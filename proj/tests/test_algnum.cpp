#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

using namespace zsg;
using zsg::fixture::Gen;

namespace {

IntPolynomial poly(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(v);
}

Integer norm2(const IntVector& v) { return dot(v, v); }

// Shortest nonzero vector by enumerating small coefficient combinations.
Integer shortest_by_search(const std::vector<IntVector>& b, long range) {
  Integer best(-1);
  const std::size_t m = b.size();
  std::vector<long> k(m, -range);
  for (;;) {
    bool nonzero = false;
    IntVector v(b[0].size(), Integer(0));
    for (std::size_t i = 0; i < m; ++i) {
      if (k[i]) nonzero = true;
      for (std::size_t t = 0; t < v.size(); ++t) v[t] += Integer(k[i]) * b[i][t];
    }
    if (nonzero) {
      Integer n = norm2(v);
      if (best < 0 || n < best) best = n;
    }
    std::size_t i = 0;
    while (i < m && k[i] == range) k[i++] = -range;
    if (i == m) break;
    ++k[i];
  }
  return best;
}

}  // namespace

TEST(Polynomial, Basics) {
  IntPolynomial p = poly({-2, 0, 4});
  EXPECT_EQ(p.degree(), 2u);
  EXPECT_EQ(p.content(), 2);
  EXPECT_EQ(p.primitive(), poly({-1, 0, 2}));
  EXPECT_EQ(poly({1, -2}).primitive(), poly({-1, 2}));
  EXPECT_EQ(p.height(), 4);
  EXPECT_EQ(p.evaluate(Rational(1, 2)), -1);
  EXPECT_EQ(p.derivative(), poly({0, 8}));
  EXPECT_EQ(poly({-1, 0, 2}).to_string(), "2*z^2 - 1");
  EXPECT_TRUE(poly({0, 0}).is_zero());
}

TEST(Polynomial, SquarefreePart) {
  // (z - 1)^2 (2z + 1)
  IntPolynomial p = poly({1, 0, -3, 2});
  EXPECT_EQ(squarefree_part(p), poly({-1, -1, 2}));
}

TEST(Sturm, CountsRoots) {
  SturmSequence s(poly({-1, 0, 2}));  // roots +-1/sqrt(2)
  EXPECT_EQ(s.count_closed(Rational(-1), Rational(1)), 2u);
  EXPECT_EQ(s.count_closed(Rational(0), Rational(1)), 1u);
  EXPECT_EQ(s.count_half_open(Rational(-1), Rational(0)), 1u);
  SturmSequence lin(poly({-1, 2}));
  EXPECT_EQ(lin.count_closed(Rational(1, 2), Rational(1, 2)), 1u);
  EXPECT_EQ(lin.count_half_open(Rational(1, 2), Rational(1)), 0u);
  SturmSequence rep(poly({1, 0, -3, 2}));
  EXPECT_EQ(rep.count_closed(Rational(-2), Rational(2)), 2u);
}

TEST(Sturm, RandomCubicsMatchDoubleRoots) {
  Gen gen(59);
  for (int t = 0; t < 40; ++t) {
    // (z - a)(z - b)(z - c) with distinct small integer roots
    long a = gen.uniform(-9, 9), b = gen.uniform(-9, 9), c = gen.uniform(-9, 9);
    if (a == b || b == c || a == c) continue;
    IntPolynomial p = poly({-a * b * c, a * b + b * c + a * c, -(a + b + c), 1});
    SturmSequence s(p);
    EXPECT_EQ(s.count_closed(Rational(-10), Rational(10)), 3u);
    long lo = std::min({a, b, c});
    EXPECT_EQ(s.count_half_open(Rational(-10), Rational(lo)), 1u);
  }
}

TEST(Lll, OrthogonalUnchanged) {
  std::vector<IntVector> b{{Integer(1), Integer(0)}, {Integer(0), Integer(1)}};
  EXPECT_EQ(lll_reduce(b), b);
}

TEST(Lll, SkewedTwoDimensional) {
  std::vector<IntVector> b{{Integer(1), Integer(0)}, {Integer(1000), Integer(1)}};
  auto r = lll_reduce(b);
  EXPECT_TRUE(is_lll_reduced(r));
  EXPECT_LE(norm2(r[0]), 2 * shortest_by_search(b, 3));
}

TEST(Lll, RejectsDependentBasis) {
  std::vector<IntVector> b{{Integer(1), Integer(2)}, {Integer(2), Integer(4)}};
  EXPECT_THROW(lll_reduce(b), InputError);
}

TEST(Lll, QualityAgainstExhaustiveSearch) {
  Gen gen(61);
  for (std::size_t m = 2; m <= 3; ++m) {
    for (int t = 0; t < 25; ++t) {
      std::vector<IntVector> b(m, IntVector(m));
      for (auto& v : b)
        for (auto& x : v) x = Integer(gen.uniform(-30, 30));
      GramSchmidt gs = gram_schmidt(b);
      bool independent = true;
      for (auto& nn : gs.norms) independent = independent && nn != 0;
      if (!independent) continue;
      auto r = lll_reduce(b);
      EXPECT_TRUE(is_lll_reduced(r));
      // |b1|^2 <= 2^(m-1) lambda_1^2; a reduced basis reaches lambda_1
      // with small coefficients, so search over it.
      const Integer lam = shortest_by_search(r, 3);
      EXPECT_LE(norm2(r[0]), Integer(1 << (m - 1)) * lam);
      // same lattice: |det| preserved
      Matrix<Rational> A(m, m), B(m, m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          A(i, j) = Rational(b[i][j]);
          B(i, j) = Rational(r[i][j]);
        }
      EXPECT_EQ(abs(bareiss_det(A)), abs(bareiss_det(B)));
    }
  }
}

TEST(Lll, HalfLatticeGivesMinimalPolynomial) {
  // rows (e_i, round(2^24 * (1/2)^i)) for q = 1
  std::vector<IntVector> b{{Integer(1), Integer(0), pow2(24)}, {Integer(0), Integer(1), pow2(23)}};
  auto r = lll_reduce(b);
  IntPolynomial p(std::vector<Integer>{r[0][0], r[0][1]});
  EXPECT_EQ(p.primitive(), poly({-1, 2}));
}

TEST(PrecisionS, Values) {
  EXPECT_EQ(precision_s(1, 8), 24u);
  EXPECT_EQ(precision_s(1, 1), 10u);
  for (std::uint64_t C = 1; C < 40; ++C) EXPECT_LT(precision_s(3, C), precision_s(3, C + 1));
  // q = 2: 4 + 4C + ceil(10 log2 3) = 4 + 4C + 16
  EXPECT_EQ(precision_s(2, 10), 60u);
}

TEST(Reconstruct, Examples) {
  const std::uint64_t s = precision_s(1, 8);
  Dyadic half = Dyadic::floor_at(Rational(1, 2), s);
  EXPECT_EQ(min_poly_from_approx(half, 1, 8), poly({-1, 2}));
  EXPECT_EQ(min_poly_from_approx(Dyadic{Integer(0), 0}, 3, 5), poly({0, 1}));

  // 40-bit approximation of sqrt(2)/2
  Integer m;
  mpz_sqrt(m.get_mpz_t(), Integer(pow2(79)).get_mpz_t());  // floor(2^39.5)
  Dyadic root{m, 40};
  ReconstructOptions opt;
  opt.error = make_rational(Integer(1), pow2(40));
  IntPolynomial p = min_poly_from_approx(root, 2, 4, opt);
  EXPECT_EQ(p, poly({-1, 0, 2}));
  // irreducible: no rational root p/q with p | 1, q | 2
  for (Rational cand : {Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2)}) EXPECT_NE(p.evaluate(cand), 0);
}

TEST(Reconstruct, FailsLoudly) {
  // 1/3 has height 3 > 2^1
  const std::uint64_t s = precision_s(1, 1);
  Dyadic third = Dyadic::round_nearest(Rational(1, 3), s + 4);
  EXPECT_THROW(min_poly_from_approx(third, 1, 1), BoundViolation);
}

TEST(Reconstruct, RationalRoundTrip) {
  Gen gen(67);
  const std::uint64_t C = 12;
  const std::uint64_t bits = precision_s(1, C) + 4;
  for (int t = 0; t < 100; ++t) {
    Integer b(gen.uniform(1, (1 << C) - 1));
    Integer a(gen.uniform(-(1 << C) + 1, (1 << C) - 1));
    Rational x = make_rational(a, b);
    IntPolynomial expect(std::vector<Integer>{Integer(-x.get_num()), x.get_den()});
    EXPECT_EQ(min_poly_from_approx(Dyadic::round_nearest(x, bits), 1, C), expect) << to_string(x);
  }
}

TEST(IsolateRoot, Examples) {
  AlgebraicNumber half = isolate_root(poly({-1, 2}), Dyadic{Integer(1), 1}, 10);
  EXPECT_TRUE(half.certified());
  EXPECT_LE(half.lo.to_rational(), Rational(1, 2));
  EXPECT_GE(half.hi.to_rational(), Rational(1, 2));
  EXPECT_LE(half.width(), make_rational(Integer(1), pow2(8)));

  Dyadic approx = Dyadic::round_nearest(Rational(707, 1000), 12);
  AlgebraicNumber s2 = isolate_root(poly({-1, 0, 2}), approx, 8);
  EXPECT_TRUE(s2.certified());
  EXPECT_GT(s2.lo.to_rational(), 0);

  AlgebraicNumber zero = isolate_root(poly({0, 1}), Dyadic{Integer(0), 0}, 6);
  EXPECT_EQ(zero.lo.to_rational(), -make_rational(Integer(1), pow2(5)));
  EXPECT_EQ(zero.hi.to_rational(), make_rational(Integer(1), pow2(5)));
  EXPECT_TRUE(zero.certified());

  EXPECT_THROW(isolate_root(poly({-1, 2}), Dyadic{Integer(3), 0}, 4), InputError);
}

TEST(IsolateRoot, CloseRootsPickNearest) {
  // roots 1/2 and 17/32, window at r = 3 holds both
  IntPolynomial p = poly({17, -66, 64});
  AlgebraicNumber a = isolate_root(p, Dyadic{Integer(17), 5}, 3);
  EXPECT_TRUE(a.certified());
  EXPECT_LE(a.lo.to_rational(), Rational(17, 32));
  EXPECT_GE(a.hi.to_rational(), Rational(17, 32));
}

TEST(Refine, ToBits) {
  AlgebraicNumber a{poly({-1, 2}), Dyadic{Integer(0), 0}, Dyadic{Integer(1), 0}};
  Dyadic m = refine(a, 10);
  EXPECT_LE(abs(m.to_rational() - Rational(1, 2)), make_rational(Integer(1), pow2(10)));

  AlgebraicNumber s{poly({-1, 0, 2}), Dyadic{Integer(1), 1}, Dyadic{Integer(1), 0}};
  Dyadic v = refine(s, 20);
  EXPECT_NEAR(v.to_rational().get_d(), std::sqrt(2.0) / 2, std::ldexp(1.0, -20));
  AlgebraicNumber i20 = refine_interval(s, 20), i30 = refine_interval(s, 30);
  EXPECT_LE(i20.lo.to_rational(), i30.lo.to_rational());
  EXPECT_GE(i20.hi.to_rational(), i30.hi.to_rational());
  EXPECT_TRUE(i30.certified());
}
