#pragma once

// Exact scalars. Integers and rationals are GMP values; mpq_class keeps
// every result of +, -, *, / in lowest terms with a positive denominator.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>

#include "zsg/error.hpp"

namespace zsg {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InputError("division by zero in rational construction");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rational_div(const Rational& a, const Rational& b) {
  if (b == 0) throw InputError("division by zero");
  return Rational(a / b);
}

// ceil(log2(p + 1)) for p >= 0, i.e. the number of binary digits of p.
inline std::uint64_t bitsize(const Integer& p) {
  if (p < 0) throw InputError("bitsize of a negative integer");
  if (p == 0) return 0;
  return mpz_sizeinbase(p.get_mpz_t(), 2);
}

inline std::uint64_t bitsize(std::uint64_t p) { return bitsize(Integer(static_cast<unsigned long>(p))); }

// Size of a rational as the larger of its numerator and denominator sizes.
inline std::uint64_t bitsize(const Rational& q) {
  Integer num = abs(q.get_num());
  return std::max(bitsize(num), bitsize(q.get_den()));
}

// Smallest t >= 0 with 2^t >= y, for y >= 1.
inline std::uint64_t ceil_log2(const Integer& y) {
  if (y < 1) throw InputError("ceil_log2 needs a positive argument");
  return bitsize(Integer(y - 1));
}

inline Integer pow2(std::uint64_t e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

inline Integer ipow(const Integer& base, std::uint64_t e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational abs_value(const Rational& q) { return Rational(abs(q)); }

// "a/b" or "a" when b = 1. Always canonical.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

namespace detail {

inline bool parse_integer(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') pos = 1;
  if (pos == text.size()) return false;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace detail

// Parses "a/b", "a", or a signed integer. Rejects b = 0, whitespace, decimals.
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  Integer num, den(1);
  if (slash == std::string_view::npos) {
    if (!detail::parse_integer(text, num)) {
      throw InputError("malformed number '" + std::string(text) + "'");
    }
  } else {
    if (!detail::parse_integer(text.substr(0, slash), num) ||
        !detail::parse_integer(text.substr(slash + 1), den) ||
        text.substr(slash + 1).front() == '-' || text.substr(slash + 1).front() == '+') {
      throw InputError("malformed number '" + std::string(text) + "'");
    }
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

/// A number mantissa / 2^exponent. Not necessarily reduced; `reduced()`
/// strips common factors of two.
struct Dyadic {
  Integer mantissa{0};
  std::uint64_t exponent{0};

  Rational to_rational() const { return make_rational(mantissa, pow2(exponent)); }

  Dyadic reduced() const {
    if (mantissa == 0) return Dyadic{0, 0};
    Dyadic d = *this;
    while (d.exponent > 0 && mpz_even_p(d.mantissa.get_mpz_t())) {
      d.mantissa /= 2;
      --d.exponent;
    }
    return d;
  }

  // Same value with the given (larger or equal) exponent.
  Dyadic with_exponent(std::uint64_t e) const {
    if (e < exponent) throw InputError("Dyadic::with_exponent cannot lower the exponent");
    return Dyadic{Integer(mantissa * pow2(e - exponent)), e};
  }

  // Exact conversion; the rational must have a power-of-two denominator.
  static Dyadic from_rational(const Rational& q) {
    const Integer& den = q.get_den();
    if (mpz_popcount(den.get_mpz_t()) != 1) {
      throw InputError("rational " + zsg::to_string(q) + " is not dyadic");
    }
    return Dyadic{q.get_num(), bitsize(den) - 1};
  }

  // Nearest dyadic with the given exponent; ties go to the even mantissa.
  static Dyadic round_nearest(const Rational& q, std::uint64_t e) {
    Rational scaled = q * Rational(pow2(e));
    Integer fl = floor_of(scaled);
    Rational frac = scaled - Rational(fl);
    Rational half(1, 2);
    if (frac > half || (frac == half && mpz_odd_p(fl.get_mpz_t()))) fl += 1;
    return Dyadic{fl, e};
  }

  static Dyadic floor_at(const Rational& q, std::uint64_t e) {
    return Dyadic{floor_of(Rational(q * Rational(pow2(e)))), e};
  }

  // "m/2^e"
  std::string to_string() const {
    return mantissa.get_str() + "/2^" + std::to_string(exponent);
  }

  static Dyadic parse(std::string_view text) {
    auto pos = text.find("/2^");
    if (pos == std::string_view::npos) {
      Integer m;
      if (!detail::parse_integer(text, m)) throw InputError("malformed dyadic '" + std::string(text) + "'");
      return Dyadic{m, 0};
    }
    Integer m, e;
    if (!detail::parse_integer(text.substr(0, pos), m) || !detail::parse_integer(text.substr(pos + 3), e) ||
        e < 0 || !e.fits_ulong_p()) {
      throw InputError("malformed dyadic '" + std::string(text) + "'");
    }
    return Dyadic{m, e.get_ui()};
  }

  friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.to_rational() == b.to_rational(); }
  friend bool operator<(const Dyadic& a, const Dyadic& b) { return a.to_rational() < b.to_rational(); }
};

}  // namespace zsg
