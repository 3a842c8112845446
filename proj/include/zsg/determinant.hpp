#pragma once

// Fraction-free (Dodgson-Jordan-Bareiss) elimination over the integers, and
// the rational wrappers built on it.

#include <cstddef>
#include <vector>

#include "zsg/matrix.hpp"
#include "zsg/rational.hpp"

namespace zsg {

namespace detail {

// Runs Bareiss elimination in place on the first `pivot_cols` columns.
// Returns +1/-1 for the accumulated row-swap sign, or 0 if a pivot column
// has no nonzero candidate. On success the entry (k, k) of the last pivot
// row holds the determinant of the leading block (times the sign).
inline int bareiss_eliminate(Matrix<Integer>& a, std::size_t pivot_cols) {
  const std::size_t n = a.rows();
  int sign = 1;
  Integer prev(1);
  Integer tmp;
  for (std::size_t k = 0; k < pivot_cols; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < a.cols(); ++j) {
        // a(i,j) = (a(i,j) * a(k,k) - a(i,k) * a(k,j)) / prev, exact.
        tmp = a(i, j) * a(k, k);
        tmp -= a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign;
}

inline Integer common_denominator(const Matrix<Rational>& m) {
  Integer d(1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const Rational& x : m.row(i)) d = lcm(d, x.get_den());
  return d;
}

}  // namespace detail

inline Integer bareiss_det(Matrix<Integer> a) {
  if (!a.square() || a.rows() == 0) throw InputError("determinant needs a nonempty square matrix");
  const std::size_t n = a.rows();
  int sign = detail::bareiss_eliminate(a, n - 1);
  if (sign == 0) return Integer(0);
  return sign > 0 ? Integer(a(n - 1, n - 1)) : Integer(-a(n - 1, n - 1));
}

/// Exact determinant of a rational matrix. All entries are scaled by one
/// common multiple D of the denominators, the integer matrix is reduced
/// fraction-free, and the result is divided by D^n.
inline Rational bareiss_det(const Matrix<Rational>& m) {
  if (!m.square() || m.rows() == 0) throw InputError("determinant needs a nonempty square matrix");
  const std::size_t n = m.rows();
  Integer d = detail::common_denominator(m);
  Matrix<Integer> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j).get_num() * (d / m(i, j).get_den());
  return make_rational(bareiss_det(std::move(a)), ipow(d, n));
}

/// Solves A x = b exactly for nonsingular square A. Each row is cleared of
/// denominators separately, the integer system is triangularised
/// fraction-free, then back-substituted in rationals.
inline std::vector<Rational> solve_fraction_free(const Matrix<Rational>& m, const std::vector<Rational>& b) {
  const std::size_t n = m.rows();
  if (!m.square() || b.size() != n || n == 0) throw InputError("solve needs a square system");
  Matrix<Integer> a(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    Integer d = b[i].get_den();
    for (std::size_t j = 0; j < n; ++j) d = lcm(d, m(i, j).get_den());
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j).get_num() * (d / m(i, j).get_den());
    a(i, n) = b[i].get_num() * (d / b[i].get_den());
  }
  if (detail::bareiss_eliminate(a, n) == 0 || a(n - 1, n - 1) == 0) throw InputError("singular system");
  std::vector<Rational> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc(a(ii, n));
    for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(a(ii, j)) * x[j];
    x[ii] = rational_div(acc, Rational(a(ii, ii)));
  }
  return x;
}

}  // namespace zsg
