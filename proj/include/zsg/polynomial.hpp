#pragma once

// Integer polynomials, Sturm sequences, and real algebraic numbers given as
// (defining polynomial, isolating dyadic interval).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zsg/rational.hpp"

namespace zsg {

/// a_0 + a_1 z + ... + a_p z^p with integer coefficients, ascending order.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Integer>& coeffs() const { return c_; }
  const Integer& coeff(std::size_t i) const { return c_[i]; }
  const Integer& leading() const { return c_.back(); }

  // max |a_i|
  Integer height() const {
    Integer h(0);
    for (const auto& a : c_) h = std::max(h, Integer(abs(a)));
    return h;
  }

  Integer content() const {
    Integer g(0);
    for (const auto& a : c_) g = gcd(g, a);
    return g;
  }

  // Divided by its content, with a positive leading coefficient.
  IntPolynomial primitive() const {
    if (is_zero()) return *this;
    Integer g = content();
    if (leading() < 0) g = -g;
    std::vector<Integer> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(out));
  }

  Rational evaluate(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  int sign_at(const Rational& x) const { return sign(evaluate(x)); }

  IntPolynomial derivative() const {
    if (c_.size() <= 1) return IntPolynomial();
    std::vector<Integer> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(d));
  }

  // "2*z^2 - 1" style, for diagnostics.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      Integer a = abs(c_[i]);
      if (s.empty()) s += c_[i] < 0 ? "-" : "";
      else s += c_[i] < 0 ? " - " : " + ";
      if (i == 0 || a != 1) s += a.get_str() + (i ? "*" : "");
      if (i >= 1) s += "z";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Integer> c_;
};

namespace detail {

using RatPoly = std::vector<Rational>;  // ascending, no trailing zeros

inline void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly to_rat(const IntPolynomial& p) {
  RatPoly r;
  for (const auto& a : p.coeffs()) r.emplace_back(a);
  return r;
}

// Positive multiple with coprime integer coefficients.
inline IntPolynomial to_int(const RatPoly& p) {
  Integer d(1);
  for (const auto& a : p) d = lcm(d, a.get_den());
  std::vector<Integer> c;
  for (const auto& a : p) c.push_back(a.get_num() * (d / a.get_den()));
  IntPolynomial q(std::move(c));
  Integer g = q.content();
  if (g == 0) return q;
  std::vector<Integer> out;
  for (const auto& a : q.coeffs()) out.push_back(Integer(a / g));
  return IntPolynomial(std::move(out));
}

inline RatPoly remainder(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

inline RatPoly quotient(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) return {};
  RatPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return q;
}

inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    RatPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace detail

/// P divided by gcd(P, P'): same real roots, all simple.
inline IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() < 1) return p;
  detail::RatPoly a = detail::to_rat(p);
  detail::RatPoly g = detail::poly_gcd(a, detail::to_rat(p.derivative()));
  if (g.size() <= 1) return p.primitive();
  return detail::to_int(detail::quotient(a, g)).primitive();
}

/// Sturm chain of the square-free part of P; each member is scaled by a
/// positive constant to integer coefficients (signs are unaffected).
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& p) {
    if (p.is_zero()) throw InputError("Sturm sequence of the zero polynomial");
    IntPolynomial sf = squarefree_part(p);
    chain_.push_back(sf);
    if (sf.degree() == 0) return;
    chain_.push_back(sf.derivative());
    detail::RatPoly a = detail::to_rat(chain_[0]), b = detail::to_rat(chain_[1]);
    for (;;) {
      detail::RatPoly r = detail::remainder(a, b);
      if (r.empty()) break;
      for (auto& x : r) x = -x;
      chain_.push_back(detail::to_int(r));
      a = std::move(b);
      b = std::move(r);
    }
  }

  std::size_t sign_changes(const Rational& x) const {
    std::size_t changes = 0;
    int prev = 0;
    for (const auto& q : chain_) {
      int s = q.sign_at(x);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
    return changes;
  }

  // Distinct real roots in the half-open interval (a, b].
  std::size_t count_half_open(const Rational& a, const Rational& b) const {
    if (b < a) return 0;
    return sign_changes(a) - sign_changes(b);
  }

  // Distinct real roots in [a, b].
  std::size_t count_closed(const Rational& a, const Rational& b) const {
    return count_half_open(a, b) + (chain_[0].sign_at(a) == 0 ? 1 : 0);
  }

  const IntPolynomial& squarefree() const { return chain_[0]; }

 private:
  std::vector<IntPolynomial> chain_;
};

/// A real algebraic number: the unique root of `poly` in [lo, hi].
struct AlgebraicNumber {
  IntPolynomial poly;
  Dyadic lo;
  Dyadic hi;

  // Sturm certificate: exactly one root in [lo, hi].
  bool certified() const {
    if (poly.is_zero() || poly.degree() < 1 || hi < lo) return false;
    return SturmSequence(poly).count_closed(lo.to_rational(), hi.to_rational()) == 1;
  }

  Rational width() const { return hi.to_rational() - lo.to_rational(); }
};

namespace detail {

// Exact midpoint (mantissas are aligned one bit finer, so the sum is exact).
inline Dyadic exact_midpoint(const Dyadic& a, const Dyadic& b) {
  std::uint64_t e = std::max(a.exponent, b.exponent);
  Integer sum = a.with_exponent(e).mantissa + b.with_exponent(e).mantissa;
  return Dyadic{sum, e + 1}.reduced();
}

// Shrinks [lo, hi] (exactly one root in (lo, hi]) until lo is not a root.
inline void open_left(const SturmSequence& s, Dyadic& lo, Dyadic& hi) {
  while (s.squarefree().sign_at(lo.to_rational()) == 0) {
    Dyadic m = exact_midpoint(lo, hi);
    if (s.count_half_open(lo.to_rational(), m.to_rational()) >= 1) hi = m;
    else lo = m;
  }
}

// Disjoint closed intervals, each with exactly one root, covering the roots
// of P in (lo, hi].
inline void isolate_all(const SturmSequence& s, Dyadic lo, Dyadic hi, std::vector<std::pair<Dyadic, Dyadic>>& out) {
  std::size_t c = s.count_half_open(lo.to_rational(), hi.to_rational());
  if (c == 0) return;
  if (c == 1) {
    open_left(s, lo, hi);
    out.emplace_back(lo, hi);
    return;
  }
  Dyadic m = exact_midpoint(lo, hi);
  isolate_all(s, lo, m, out);
  isolate_all(s, m, hi, out);
}

inline Rational distance_to_interval(const Rational& x, const Rational& a, const Rational& b) {
  if (x < a) return a - x;
  if (x > b) return x - b;
  return Rational(0);
}

}  // namespace detail

/// Bisects the isolating interval until its width is at most 2^-bits.
inline AlgebraicNumber refine_interval(const AlgebraicNumber& a, std::uint64_t bits) {
  SturmSequence s(a.poly);
  AlgebraicNumber r = a;
  const Rational target = make_rational(Integer(1), pow2(bits));
  while (r.width() > target) {
    Dyadic m = detail::exact_midpoint(r.lo, r.hi);
    Rational mq = m.to_rational();
    if (s.squarefree().sign_at(mq) == 0) {
      r.lo = m;
      r.hi = m;
      break;
    }
    if (s.count_closed(r.lo.to_rational(), mq) >= 1) r.hi = m;
    else r.lo = m;
  }
  return r;
}

/// Midpoint of the interval after refinement to width <= 2^-bits; within
/// 2^-(bits+1) of the number.
inline Dyadic refine(const AlgebraicNumber& a, std::uint64_t bits) {
  AlgebraicNumber r = refine_interval(a, bits);
  return detail::exact_midpoint(r.lo, r.hi);
}

/// Isolates the root of P lying within 2^-r of `approx`. The returned
/// interval has width at most 2^(2-r) and contains exactly one root.
inline AlgebraicNumber isolate_root(const IntPolynomial& p, const Dyadic& approx, std::uint64_t r) {
  if (p.degree() < 1) throw InputError("isolate_root needs a nonconstant polynomial");
  SturmSequence s(p);
  const std::uint64_t e = std::max<std::uint64_t>(approx.exponent, r + 1);
  const Dyadic center = approx.with_exponent(e);
  const Integer half = pow2(e - r + 1);  // 2^(1-r) in units of 2^-e
  Dyadic lo{Integer(center.mantissa - half), e}, hi{Integer(center.mantissa + half), e};
  lo = lo.reduced();
  hi = hi.reduced();
  const Rational lq = lo.to_rational(), hq = hi.to_rational();
  const std::size_t total = s.count_closed(lq, hq);
  if (total == 0) throw InputError("no root of " + p.to_string() + " near " + approx.to_string());
  if (total == 1) return AlgebraicNumber{p, lo, hi};

  std::vector<std::pair<Dyadic, Dyadic>> pieces;
  if (s.squarefree().sign_at(lq) == 0) pieces.emplace_back(lo, lo);
  detail::isolate_all(s, lo, hi, pieces);
  // Narrow every piece, then keep the one closest to the approximation.
  const Rational x = approx.to_rational();
  const Rational band = make_rational(Integer(1), pow2(r));
  std::optional<std::pair<Rational, AlgebraicNumber>> best;
  for (auto& [a, b] : pieces) {
    AlgebraicNumber cand = refine_interval(AlgebraicNumber{p, a, b}, r + 8);
    Rational d = detail::distance_to_interval(x, cand.lo.to_rational(), cand.hi.to_rational());
    if (d > band) continue;
    if (!best || d < best->first) best.emplace(d, AlgebraicNumber{p, a, b});
  }
  if (!best) throw InputError("no root of " + p.to_string() + " within 2^-" + std::to_string(r) + " of the approximation");
  return best->second;
}

/// Coarsest window [approx - 2^(1-t), approx + 2^(1-t)], t = start_bits,
/// start_bits + 1, ..., r, that isolates the root within 2^-r of `approx`.
inline AlgebraicNumber isolate_root_coarse(const IntPolynomial& p, const Dyadic& approx, std::uint64_t r,
                                           std::uint64_t start_bits = 3) {
  SturmSequence s(p);
  for (std::uint64_t t = std::min(start_bits, r); t < r; ++t) {
    const std::uint64_t e = std::max<std::uint64_t>(approx.exponent, t + 1);
    const Dyadic center = approx.with_exponent(e);
    const Integer half = pow2(e - t + 1);
    Dyadic lo = Dyadic{Integer(center.mantissa - half), e}.reduced();
    Dyadic hi = Dyadic{Integer(center.mantissa + half), e}.reduced();
    if (s.count_closed(lo.to_rational(), hi.to_rational()) == 1) return AlgebraicNumber{p, lo, hi};
  }
  return isolate_root(p, approx, r);
}

}  // namespace zsg
