#pragma once

// Exact value and optimal strategies of finite zero-sum matrix games.
//
// The row player's problem
//     max v  s.t.  sum_i x_i m_ij >= v (all j),  sum_i x_i = 1,  x >= 0
// is solved by a two-phase primal simplex on an integer tableau with
// fraction-free (Edmonds/Bareiss) pivoting and Bland's rule. The column
// player's strategy is the dual solution, read off the final tableau.

#include <cstddef>
#include <optional>
#include <vector>

#include "zsg/determinant.hpp"
#include "zsg/matrix.hpp"
#include "zsg/rational.hpp"

namespace zsg {

using MatrixGame = Matrix<Rational>;

struct GameSolution {
  Rational value;
  std::vector<Rational> x;  // row player
  std::vector<Rational> y;  // column player
  std::size_t pivots = 0;
};

namespace detail {

inline Integer binomial(std::size_t n, std::size_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// max c^T x  s.t.  A x = b, x >= 0, with integer data and b >= 0.
// Every row gets an artificial column; artificial i sits at column
// `structural + i`.
class IntegerSimplex {
 public:
  IntegerSimplex(const Matrix<Integer>& A, const std::vector<Integer>& b, std::vector<Integer> c)
      : m_(A.rows()), n_(A.cols()), cost_(std::move(c)), t_(m_ + 1, n_ + m_ + 1), basis_(m_) {
    for (std::size_t i = 0; i < m_; ++i) {
      if (b[i] < 0) throw InputError("simplex right-hand side must be nonnegative");
      for (std::size_t j = 0; j < n_; ++j) t_(i, j) = A(i, j);
      t_(i, n_ + i) = 1;
      t_(i, rhs()) = b[i];
      basis_[i] = n_ + i;
    }
    // Phase-1 objective max -sum(a): reduced costs -sum_i A_ij.
    for (std::size_t j = 0; j < n_; ++j) {
      Integer s(0);
      for (std::size_t i = 0; i < m_; ++i) s -= A(i, j);
      t_(m_, j) = s;
    }
    Integer s(0);
    for (std::size_t i = 0; i < m_; ++i) s -= b[i];
    t_(m_, rhs()) = s;
    pivot_budget_ = binomial(n_ + m_, m_);
  }

  // Returns false if the problem is unbounded. Throws if infeasible.
  bool solve() {
    run(/*allow_artificial=*/true);
    if (t_(m_, rhs()) != 0) throw InputError("linear program is infeasible");
    drive_out_artificials();
    install_phase2_objective();
    return run(/*allow_artificial=*/false);
  }

  Rational objective() const { return make_rational(t_(m_, rhs()), den_); }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = make_rational(t_(i, rhs()), den_);
    return x;
  }

  std::vector<Rational> dual() const {
    std::vector<Rational> y(m_);
    for (std::size_t i = 0; i < m_; ++i) y[i] = make_rational(t_(m_, n_ + i), den_);
    return y;
  }

  std::size_t pivots() const { return pivots_; }

 private:
  std::size_t rhs() const { return n_ + m_; }

  void pivot(std::size_t r, std::size_t s) {
    if (Integer(pivots_) >= pivot_budget_) throw BoundViolation("simplex pivot budget exceeded (cycling?)");
    ++pivots_;
    const Integer p = t_(r, s);
    Integer tmp;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r) continue;
      const Integer f = t_(i, s);
      for (std::size_t j = 0; j < t_.cols(); ++j) {
        tmp = t_(i, j) * p;
        if (f != 0) tmp -= f * t_(r, j);
        mpz_divexact(t_(i, j).get_mpz_t(), tmp.get_mpz_t(), den_.get_mpz_t());
      }
    }
    den_ = p;
    if (den_ < 0) {
      den_ = -den_;
      for (std::size_t i = 0; i <= m_; ++i)
        for (std::size_t j = 0; j < t_.cols(); ++j) t_(i, j) = -t_(i, j);
    }
    basis_[r] = s;
  }

  // Bland: lowest-index improving column, then the min-ratio row with the
  // lowest basic index.
  bool run(bool allow_artificial) {
    const std::size_t limit = allow_artificial ? n_ + m_ : n_;
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (t_(m_, j) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return true;
      std::size_t leave = m_;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_(i, enter) <= 0) continue;
        if (leave == m_) {
          leave = i;
          continue;
        }
        // compare t(i,rhs)/t(i,enter) with t(leave,rhs)/t(leave,enter)
        int c = cmp(Integer(t_(i, rhs()) * t_(leave, enter)), Integer(t_(leave, rhs()) * t_(i, enter)));
        if (c < 0 || (c == 0 && basis_[i] < basis_[leave])) leave = i;
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (t_(i, j) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  void install_phase2_objective() {
    for (std::size_t j = 0; j <= rhs(); ++j) {
      Integer s(0);
      for (std::size_t i = 0; i < m_; ++i)
        if (basis_[i] < n_ && cost_[basis_[i]] != 0) s += cost_[basis_[i]] * t_(i, j);
      if (j < n_) s -= cost_[j] * den_;
      t_(m_, j) = s;
    }
  }

  std::size_t m_, n_;
  std::vector<Integer> cost_;
  Matrix<Integer> t_;
  std::vector<std::size_t> basis_;
  Integer den_{1};
  std::size_t pivots_ = 0;
  Integer pivot_budget_;
};

}  // namespace detail

inline void check_matrix_game(const MatrixGame& m) {
  if (m.rows() == 0 || m.cols() == 0) throw InputError("matrix game needs at least one row and one column");
}

/// Exact duality certificate: min_j (x^T M)_j = value = max_i (M y)_i.
inline bool verify_solution(const MatrixGame& m, const GameSolution& sol) {
  if (sol.x.size() != m.rows() || sol.y.size() != m.cols()) return false;
  Rational sx(0), sy(0);
  for (const auto& v : sol.x) {
    if (v < 0) return false;
    sx += v;
  }
  for (const auto& v : sol.y) {
    if (v < 0) return false;
    sy += v;
  }
  if (sx != 1 || sy != 1) return false;
  std::optional<Rational> guaranteed, conceded;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Rational acc(0);
    for (std::size_t i = 0; i < m.rows(); ++i) acc += sol.x[i] * m(i, j);
    if (!guaranteed || acc < *guaranteed) guaranteed = acc;
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational acc(0);
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * sol.y[j];
    if (!conceded || acc > *conceded) conceded = acc;
  }
  return *guaranteed == sol.value && *conceded == sol.value;
}

inline GameSolution lp_value(const MatrixGame& m) {
  check_matrix_game(m);
  const std::size_t p = m.rows(), q = m.cols();
  // Integer matrix a = (D / g) * m with D the common denominator and g the
  // content; the value scales by the same positive factor.
  Integer D = detail::common_denominator(m);
  Matrix<Integer> a(p, q);
  Integer content(0);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      a(i, j) = m(i, j).get_num() * (D / m(i, j).get_den());
      content = gcd(content, a(i, j));
    }
  if (content == 0) content = 1;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), content.get_mpz_t());

  // Columns: x_1..x_p, v+, v-, s_1..s_q. Rows: one per column of m, then sum(x) = 1.
  const std::size_t vars = p + 2 + q;
  Matrix<Integer> A(q + 1, vars, Integer(0));
  std::vector<Integer> b(q + 1, Integer(0));
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t i = 0; i < p; ++i) A(j, i) = -a(i, j);
    A(j, p) = 1;
    A(j, p + 1) = -1;
    A(j, p + 2 + j) = 1;
  }
  for (std::size_t i = 0; i < p; ++i) A(q, i) = 1;
  b[q] = 1;
  std::vector<Integer> c(vars, Integer(0));
  c[p] = 1;
  c[p + 1] = -1;

  detail::IntegerSimplex lp(A, b, c);
  if (!lp.solve()) throw BoundViolation("matrix-game LP reported unbounded");
  const Rational scale = make_rational(content, D);
  GameSolution sol;
  sol.value = lp.objective() * scale;
  std::vector<Rational> primal = lp.primal();
  sol.x.assign(primal.begin(), primal.begin() + static_cast<std::ptrdiff_t>(p));
  std::vector<Rational> dual = lp.dual();
  sol.y.assign(dual.begin(), dual.begin() + static_cast<std::ptrdiff_t>(q));
  sol.pivots = lp.pivots();
  if (!verify_solution(m, sol)) throw BoundViolation("matrix-game solution failed its duality certificate");
  return sol;
}

/// Sum of the entries of the cofactor matrix; 1 for a 1x1 matrix.
inline Rational cofactor_sum(const Matrix<Rational>& m) {
  if (!m.square() || m.rows() == 0) throw InputError("cofactor sum needs a nonempty square matrix");
  if (m.rows() == 1) return Rational(1);
  Rational s(0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational minor_det = bareiss_det(m.minor(i, j));
      if ((i + j) % 2) s -= minor_det;
      else s += minor_det;
    }
  return s;
}

struct KernelHit {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Rational ratio;  // det / S of the submatrix
};

namespace detail {

// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order;
// stops early when f returns true.
template <class F>
bool for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t t = 0; t < k; ++t) idx[t] = t;
  for (;;) {
    if (f(idx)) return true;
    std::size_t t = k;
    while (t > 0 && idx[t - 1] == n - k + t - 1) --t;
    if (t == 0) return false;
    ++idx[t - 1];
    for (std::size_t u = t; u < k; ++u) idx[u] = idx[u - 1] + 1;
  }
}

}  // namespace detail

/// Brute-force search for a square submatrix K with S(K) != 0 and
/// det(K) / S(K) equal to the value. Test oracle for small games only.
inline std::optional<KernelHit> shapley_snow_kernel(const MatrixGame& m, std::size_t max_dim = 4) {
  check_matrix_game(m);
  if (m.rows() > max_dim || m.cols() > max_dim) throw InputError("matrix too large for kernel search");
  const Rational value = lp_value(m).value;
  std::optional<KernelHit> hit;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()) && !hit; ++k) {
    detail::for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      return detail::for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        Matrix<Rational> sub = m.submatrix(rows, cols);
        Rational s = cofactor_sum(sub);
        if (s == 0) return false;
        Rational ratio = bareiss_det(sub) / s;
        if (ratio != value) return false;
        hit = KernelHit{rows, cols, ratio};
        return true;
      });
    });
  }
  return hit;
}

}  // namespace zsg
