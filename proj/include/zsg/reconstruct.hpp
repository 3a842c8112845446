#pragma once

// Minimal polynomial of an algebraic number from a dyadic approximation,
// by lattice reduction (Kannan-Lenstra-Lovasz style).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zsg/error.hpp"
#include "zsg/lll.hpp"
#include "zsg/polynomial.hpp"
#include "zsg/rational.hpp"

namespace zsg {

/// ceil(q^2 + (3q+4) log2(q+1) + 2qC), exactly:
/// ceil(log2((q+1)^(3q+4))) is an integer bit-length computation.
inline std::uint64_t precision_s(std::uint64_t q, std::uint64_t C) {
  if (q < 1 || C < 1) throw InputError("precision_s needs q >= 1 and C >= 1");
  const Integer power = ipow(Integer(static_cast<unsigned long>(q + 1)), 3 * q + 4);
  return q * q + 2 * q * C + ceil_log2(power);
}

struct ReconstructOptions {
  // Certified distance between the approximation and the target. Unset means
  // the precondition bound 2^-s / (12 q).
  std::optional<Rational> error;
  // Lattice weight exponent. Zero means s(q, C).
  std::uint64_t weight_bits = 0;
};

namespace detail {

// Upper bound for |P'| on [x - d, x + d].
inline Rational derivative_bound(const IntPolynomial& p, const Rational& x, const Rational& d) {
  const Rational reach = abs_value(x) + d;
  Rational acc(0), power(1);
  for (std::size_t i = 1; i <= p.degree(); ++i) {
    acc += Rational(abs(p.coeff(i)) * static_cast<unsigned long>(i)) * power;
    power *= reach;
  }
  return acc;
}

// Accepts P when it is within the height bound, |P(x)| is no larger than a
// root at distance <= d would allow, and P has a root in [x - d, x + d].
inline bool plausible(const IntPolynomial& p, const Rational& x, const Rational& d, const Integer& max_height) {
  if (p.degree() < 1 || p.height() > max_height) return false;
  if (abs_value(p.evaluate(x)) > d * derivative_bound(p, x, d)) return false;
  return SturmSequence(p).count_closed(x - d, x + d) >= 1;
}

}  // namespace detail

/// Primitive integer polynomial of least degree <= q, height <= 2^C, with a
/// root within the certified error of `approx`. Throws BoundViolation when
/// no candidate passes, which means the caller's guarantees do not hold.
inline IntPolynomial min_poly_from_approx(const Dyadic& approx, std::uint64_t q, std::uint64_t C,
                                          const ReconstructOptions& opt = {}) {
  const std::uint64_t s = precision_s(q, C);
  const std::uint64_t w = opt.weight_bits ? opt.weight_bits : s;
  const Rational x = approx.to_rational();
  const Rational d = opt.error ? *opt.error : make_rational(Integer(1), pow2(s) * Integer(static_cast<unsigned long>(12 * q)));
  if (d < 0) throw InputError("approximation error must be nonnegative");
  const Integer max_height = pow2(C);

  // Powers 2^w x^i rounded to the nearest integer, ties to even.
  std::vector<Integer> weighted;
  Rational power(1);
  for (std::uint64_t i = 0; i <= q; ++i) {
    weighted.push_back(Dyadic::round_nearest(power, w).mantissa);
    power *= x;
  }

  for (std::uint64_t deg = 1; deg <= q; ++deg) {
    std::vector<IntVector> basis(deg + 1, IntVector(deg + 2, Integer(0)));
    for (std::uint64_t i = 0; i <= deg; ++i) {
      basis[i][i] = 1;
      basis[i][deg + 1] = weighted[i];
    }
    const std::vector<IntVector> reduced = lll_reduce(std::move(basis));
    std::optional<IntPolynomial> best;
    for (const auto& v : reduced) {
      IntPolynomial cand(std::vector<Integer>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(deg + 1)));
      if (cand.is_zero()) continue;
      cand = cand.primitive();
      if (cand.degree() < 1 || !detail::plausible(cand, x, d, max_height)) continue;
      // Prefer the lowest degree, then the smallest height.
      if (!best || cand.degree() < best->degree() ||
          (cand.degree() == best->degree() && cand.height() < best->height()))
        best = cand;
    }
    if (best) return *best;
  }
  throw BoundViolation("no integer polynomial of degree <= " + std::to_string(q) + " and height <= 2^" +
                       std::to_string(C) + " fits the approximation " + approx.to_string());
}

}  // namespace zsg
