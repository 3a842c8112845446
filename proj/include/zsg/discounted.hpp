#pragma once

// Discounted value v^k_lambda by bisection on the sign of val W(lambda, z, k),
// and its exact algebraic form by lattice reconstruction.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "zsg/error.hpp"
#include "zsg/game.hpp"
#include "zsg/param_game.hpp"
#include "zsg/polynomial.hpp"
#include "zsg/reconstruct.hpp"

namespace zsg {

struct BoundSet {
  std::uint64_t C = 0;  // height bits of the defining polynomial
  std::uint64_t s = 0;  // reconstruction precision
  std::uint64_t r = 0;  // bisection precision
  std::uint64_t q = 0;  // degree bound used for s and r
  friend bool operator==(const BoundSet&, const BoundSet&) = default;
};

/// C = 8 I^2 n^2 bit(N), s = s(q, C), r = s ceil(log2(12 q)); q defaults to I.
inline BoundSet compute_bounds(std::uint64_t n, std::uint64_t I, const Integer& N, std::uint64_t q = 0) {
  if (n < 1 || I < 1 || N < 1) throw InputError("compute_bounds needs positive n, |I| and N");
  if (q == 0) q = I;
  BoundSet b;
  b.q = q;
  b.C = 8 * I * I * n * n * bitsize(N);
  b.s = precision_s(q, b.C);
  b.r = b.s * ceil_log2(Integer(static_cast<unsigned long>(12 * q)));
  return b;
}

enum class DegreeBound { tight, full };  // min(|I|,|J|) or |I|

inline std::uint64_t degree_bound(const GameSpec& g, DegreeBound mode) {
  const std::uint64_t I = profile_count(g, Player::one);
  const std::uint64_t J = profile_count(g, Player::two);
  return mode == DegreeBound::tight ? std::min(I, J) : I;
}

inline BoundSet compute_bounds(const NormalizedGame& g, DegreeBound mode = DegreeBound::tight) {
  return compute_bounds(g.n(), profile_count(g.spec, Player::one), g.N, degree_bound(g.spec, mode));
}

/// Bit-size bound on the entries of W for bit(z) <= 2r:
/// 2n bit(N^2) + n bit(n) + r + 1.
inline std::uint64_t entry_bit_bound(std::uint64_t n, const Integer& N, std::uint64_t r) {
  return 2 * n * bitsize(Integer(N * N)) + n * bitsize(static_cast<std::uint64_t>(n)) + r + 1;
}

struct ApproxResult {
  Integer u;                     // v in [u 2^-r, (u+1) 2^-r]
  std::uint64_t r = 0;
  std::uint64_t iterations = 0;
  std::uint64_t peak_entry_bits = 0;
  std::uint64_t entry_bound = 0;
  bool hit_zero = false;         // some midpoint had val W = 0

  Dyadic lo() const { return Dyadic{u, r}; }
  Dyadic hi() const { return Dyadic{Integer(u + 1), r}; }
};

using ProgressFn = std::function<void(std::uint64_t done, std::uint64_t total)>;

struct ApproxOptions {
  unsigned threads = 0;
  ProgressFn progress;
};

inline void check_lambda_grid(const NormalizedGame& g, const Rational& lambda) {
  check_discount(lambda);
  if (!is_integer(Rational(lambda * Rational(g.N)))) {
    throw InputError("lambda * N must be an integer (lambda = " + to_string(lambda) + ", N = " + g.N.get_str() + ")");
  }
}

/// The same game with N lifted so that lambda N is an integer.
inline NormalizedGame lift_for_lambda(const NormalizedGame& g, const Rational& lambda) {
  return g.with_denominator(lcm(g.N, lambda.get_den()));
}

/// Bisection on z in [0, 1]: val W >= 0 raises the lower end, val W <= 0
/// lowers the upper end (both when it is zero), until the gap is <= 2^-r.
inline ApproxResult approx_value(const NormalizedGame& g, const Rational& lambda, std::size_t k, std::uint64_t r,
                                 const ApproxOptions& opt = {}) {
  check_lambda_grid(g, lambda);
  if (k >= g.n()) throw InputError("initial state out of range");
  ApproxResult res;
  res.r = r;
  res.entry_bound = entry_bit_bound(g.n(), g.N, r);
  if (r == 0) return res;

  const WFamily family(g, lambda, k, opt.threads);
  Rational lo(0), hi(1);
  const Rational gap = make_rational(Integer(1), pow2(r));
  while (hi - lo > gap) {
    const Rational z = (lo + hi) / 2;
    if (bitsize(z) > 2 * r) throw BoundViolation("midpoint exceeds 2r bits");
    const MatrixGame w = family.matrix(z);
    for (std::size_t i = 0; i < w.rows(); ++i)
      for (const Rational& x : w.row(i)) res.peak_entry_bits = std::max(res.peak_entry_bits, bitsize(x));
    if (res.peak_entry_bits > res.entry_bound) {
      throw BoundViolation("W entry of " + std::to_string(res.peak_entry_bits) + " bits exceeds the bound " +
                           std::to_string(res.entry_bound));
    }
    const Rational v = lp_value(w).value;
    ++res.iterations;
    if (v >= 0) lo = z;
    if (v <= 0) hi = z;
    if (v == 0) res.hit_zero = true;
    if (opt.progress) opt.progress(res.iterations, r);
  }
  if (res.iterations > r) throw BoundViolation("bisection exceeded r iterations");
  res.u = floor_of(Rational(lo * Rational(pow2(r))));
  return res;
}

struct ExactResult {
  AlgebraicNumber value;
  BoundSet bounds;
  ApproxResult approx;
};

/// Root of `poly` isolated near u/2^r, checked to lie in [u 2^-r, (u+1) 2^-r].
inline AlgebraicNumber attach_interval(const IntPolynomial& poly, const Dyadic& approx, std::uint64_t r,
                                       const Dyadic& lo, const Dyadic& hi) {
  AlgebraicNumber a = isolate_root_coarse(poly, approx, r, 3);
  if (!a.certified()) throw BoundViolation("isolating interval failed its Sturm certificate");
  const Rational a_lo = std::max(a.lo.to_rational(), lo.to_rational());
  const Rational a_hi = std::min(a.hi.to_rational(), hi.to_rational());
  if (a_lo > a_hi || SturmSequence(poly).count_closed(a_lo, a_hi) != 1) {
    throw BoundViolation("reconstructed root " + poly.to_string() + " lies outside the bisection interval");
  }
  return a;
}

/// Exact v^k_lambda as (minimal polynomial, isolating interval).
inline ExactResult exact_value(const NormalizedGame& g, const Rational& lambda, std::size_t k,
                               DegreeBound mode = DegreeBound::tight, const ApproxOptions& opt = {}) {
  if (!g.affine.identity()) throw InputError("exact solver needs payoffs in [0, 1] (identity payoff map)");
  ExactResult out;
  out.bounds = compute_bounds(g, mode);
  out.approx = approx_value(g, lambda, k, out.bounds.r, opt);
  const Dyadic approx = out.approx.lo();
  ReconstructOptions ro;
  ro.error = make_rational(Integer(1), pow2(out.bounds.r));
  const IntPolynomial poly = min_poly_from_approx(approx, out.bounds.q, out.bounds.C, ro);
  out.value = attach_interval(poly, approx, out.bounds.r, out.approx.lo(), out.approx.hi());
  return out;
}

}  // namespace zsg
