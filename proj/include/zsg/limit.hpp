#pragma once

// Limit value lim_{lambda -> 0} v^k_lambda: below a threshold lambda_r the
// sign of val W(lambda_r, z, k) agrees with the limit's on the grid of step
// 2^-r, so bisection at lambda_r brackets the limit.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>

#include "zsg/discounted.hpp"

namespace zsg {

enum class ThresholdMode { simple, tight };

struct ThresholdParams {
  std::uint64_t n = 0, I = 0, J = 0;
  Integer N{1};
  ThresholdMode mode = ThresholdMode::tight;
};

inline ThresholdParams threshold_params(const NormalizedGame& g, ThresholdMode mode = ThresholdMode::tight) {
  return ThresholdParams{g.n(), profile_count(g.spec, Player::one), profile_count(g.spec, Player::two), g.N, mode};
}

// 10 I^2 n^2 bit(N) r
inline std::uint64_t simple_exponent(const ThresholdParams& p, std::uint64_t r) {
  return 10 * p.I * p.I * p.n * p.n * bitsize(p.N) * r;
}

// I n bit(n) + I n bit(N) + I bit(I) + 2 bit(I n + 1) + r n I + 1
inline std::uint64_t tight_exponent(const ThresholdParams& p, std::uint64_t r) {
  const std::uint64_t In = p.I * p.n;
  return In * bitsize(p.n) + In * bitsize(p.N) + p.I * bitsize(p.I) + 2 * bitsize(In + 1) + r * In + 1;
}

/// e with lambda_r = 2^-e.
inline std::uint64_t threshold_exponent(const ThresholdParams& p, std::uint64_t r) {
  if (r < 1) throw InputError("threshold precision must be at least 1");
  const std::uint64_t simple = simple_exponent(p, r), tight = tight_exponent(p, r);
  if (tight > simple) throw BoundViolation("tight threshold exponent exceeds the simple one");
  return p.mode == ThresholdMode::simple ? simple : tight;
}

inline Rational lambda_threshold(const ThresholdParams& p, std::uint64_t r) {
  return make_rational(Integer(1), pow2(threshold_exponent(p, r)));
}

namespace detail {

// Bisection at lambda_r = 2^-e with N lifted to N 2^e, so lambda N is integral.
inline ApproxResult approx_at_threshold(const NormalizedGame& g, std::size_t k, std::uint64_t threshold_r,
                                        std::uint64_t bits, ThresholdMode mode, const ApproxOptions& opt) {
  const std::uint64_t e = threshold_exponent(threshold_params(g, mode), threshold_r);
  const NormalizedGame lifted = g.with_denominator(g.N * pow2(e));
  return approx_value(lifted, make_rational(Integer(1), pow2(e)), k, bits, opt);
}

}  // namespace detail

/// u with |lim v^k - u 2^-(r+1)| <= 2^-r, from bisection at lambda_{r+1}
/// with precision r + 1.
inline ApproxResult limit_approx_fast(const NormalizedGame& g, std::size_t k, std::uint64_t r,
                                      ThresholdMode mode = ThresholdMode::tight, const ApproxOptions& opt = {}) {
  return detail::approx_at_threshold(g, k, r + 1, r + 1, mode, opt);
}

/// u with lim v^k in [u 2^-r, (u+1) 2^-r], from bisection at lambda_r.
inline ApproxResult limit_approx_direct(const NormalizedGame& g, std::size_t k, std::uint64_t r,
                                        ThresholdMode mode = ThresholdMode::tight, const ApproxOptions& opt = {}) {
  if (r == 0) {
    ApproxResult res;
    res.entry_bound = entry_bit_bound(g.n(), g.N, 0);
    return res;
  }
  return detail::approx_at_threshold(g, k, r, r, mode, opt);
}

/// Exact limit value as (minimal polynomial, isolating interval).
inline ExactResult limit_exact(const NormalizedGame& g, std::size_t k, DegreeBound degree = DegreeBound::tight,
                               ThresholdMode mode = ThresholdMode::tight, const ApproxOptions& opt = {}) {
  if (!g.affine.identity()) throw InputError("exact solver needs payoffs in [0, 1] (identity payoff map)");
  ExactResult out;
  out.bounds = compute_bounds(g, degree);
  const std::uint64_t r = out.bounds.r;
  // u over 2^(r+2), within 2^-(r+1) of the limit.
  out.approx = limit_approx_fast(g, k, r + 1, mode, opt);
  const Dyadic approx = out.approx.lo();
  ReconstructOptions ro;
  ro.error = make_rational(Integer(1), pow2(r + 1));
  const IntPolynomial poly = min_poly_from_approx(approx, out.bounds.q, out.bounds.C, ro);
  const Dyadic lo = Dyadic{Integer(approx.mantissa - 2), approx.exponent};
  const Dyadic hi = Dyadic{Integer(approx.mantissa + 2), approx.exponent};
  out.value = attach_interval(poly, approx, r + 1, lo, hi);
  return out;
}

}  // namespace zsg
