#pragma once

// Reference computations used to check the solvers: the Shapley operator,
// value iteration, and brute-force minimax for tiny matrices.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zsg/error.hpp"
#include "zsg/game.hpp"
#include "zsg/matrix_game.hpp"

namespace zsg {

/// Auxiliary game at state l: lambda g + (1 - lambda) sum_l' q(l'|l,i,j) u_l'.
inline MatrixGame shapley_matrix(const GameSpec& g, const Rational& lambda, const std::vector<Rational>& u,
                                 std::size_t state) {
  const Rational keep = 1 - lambda;
  MatrixGame m(g.actions1[state], g.actions2[state]);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational cont(0);
      const auto& q = g.transition[state](i, j);
      for (std::size_t t = 0; t < g.n; ++t)
        if (q[t] != 0) cont += q[t] * u[t];
      m(i, j) = lambda * g.payoff[state](i, j) + keep * cont;
    }
  return m;
}

inline std::vector<Rational> shapley_step(const GameSpec& g, const Rational& lambda, const std::vector<Rational>& u) {
  if (lambda <= 0 || lambda > 1) throw InputError("discount factor must lie in (0, 1]");
  if (u.size() != g.n) throw InputError("vector length does not match state count");
  std::vector<Rational> out(g.n);
  for (std::size_t s = 0; s < g.n; ++s) out[s] = lp_value(shapley_matrix(g, lambda, u, s)).value;
  return out;
}

inline std::vector<Rational> shapley_step(const NormalizedGame& g, const Rational& lambda,
                                          const std::vector<Rational>& u) {
  return shapley_step(g.spec, lambda, u);
}

inline Rational sup_distance(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational d(0);
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, Rational(abs(a[i] - b[i])));
  return d;
}

struct ValueIterationOptions {
  // Round each iterate to a dyadic grid; keeps numbers small when lambda is
  // tiny. The stopping rule then uses the exact residual |Phi(u) - u|.
  bool rounded = false;
};

struct ValueIterationResult {
  std::vector<Rational> values;
  std::uint64_t iterations = 0;
  Rational tolerance;  // certified sup-distance to the value vector
};

/// ceil((60 + bits(1/eps)) / -log2(1 - lambda))
inline std::uint64_t iteration_cap(const Rational& lambda, const Rational& eps) {
  if (lambda >= 1) return 1;
  const double rate = -std::log1p(-lambda.get_d()) / std::log(2.0);
  const double bits = static_cast<double>(bitsize(ceil_of(Rational(1 / eps))));
  const double cap = std::ceil((60.0 + bits) / rate);
  if (!(cap < 1e15)) throw InputError("value iteration would need more than 1e15 steps");
  return static_cast<std::uint64_t>(cap);
}

/// Iterates Phi from 0 until the iterate is within eps of the value vector.
inline ValueIterationResult value_iteration(const GameSpec& g, const Rational& lambda, const Rational& eps,
                                            const ValueIterationOptions& opt = {}) {
  if (lambda <= 0 || lambda > 1) throw InputError("discount factor must lie in (0, 1]");
  if (eps <= 0) throw InputError("tolerance must be positive");
  ValueIterationResult res;
  std::vector<Rational> u(g.n, Rational(0));
  if (lambda == 1) {
    res.values = shapley_step(g, lambda, u);
    res.iterations = 1;
    res.tolerance = 0;
    return res;
  }
  const std::uint64_t cap = iteration_cap(lambda, eps);

  if (!opt.rounded) {
    // |u' - u| <= eps lambda / (1 - lambda) gives |u' - v| <= eps.
    const Rational stop = eps * lambda / (1 - lambda);
    for (;;) {
      std::vector<Rational> next = shapley_step(g, lambda, u);
      ++res.iterations;
      const Rational d = sup_distance(next, u);
      u = std::move(next);
      if (d <= stop) break;
      if (res.iterations >= cap) throw BoundViolation("value iteration hit its cap of " + std::to_string(cap) + " steps");
    }
    res.values = std::move(u);
    res.tolerance = eps;
    return res;
  }

  // |u - v| <= |Phi(u) - u| / lambda. With grid step h the residual settles
  // near h / lambda, so h <= eps lambda^2 / 2 lets it reach eps lambda.
  std::uint64_t e = 0;
  const Rational grid_target = eps * lambda * lambda / 2;
  while (make_rational(Integer(1), pow2(e)) > grid_target) ++e;
  const Rational stop = eps * lambda;
  for (;;) {
    std::vector<Rational> next = shapley_step(g, lambda, u);
    ++res.iterations;
    const Rational residual = sup_distance(next, u);
    if (residual <= stop) {
      res.values = std::move(u);
      res.tolerance = residual / lambda;
      return res;
    }
    for (auto& x : next) x = Dyadic::round_nearest(x, e).to_rational();
    u = std::move(next);
    if (res.iterations >= cap) throw BoundViolation("value iteration hit its cap of " + std::to_string(cap) + " steps");
  }
}

inline ValueIterationResult value_iteration(const NormalizedGame& g, const Rational& lambda, const Rational& eps,
                                            const ValueIterationOptions& opt = {}) {
  return value_iteration(g.spec, lambda, eps, opt);
}

namespace detail {

// Cofactor expansion; independent of the Bareiss code.
inline Rational small_det(const Matrix<Rational>& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Rational d(0);
  for (std::size_t j = 0; j < n; ++j) {
    Rational t = m(0, j) * small_det(m.minor(0, j));
    if (j % 2) d -= t;
    else d += t;
  }
  return d;
}

inline Matrix<Rational> adjugate(const Matrix<Rational>& m) {
  const std::size_t n = m.rows();
  Matrix<Rational> adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational c = small_det(m.minor(i, j));
      adj(j, i) = (i + j) % 2 ? Rational(-c) : c;
    }
  return adj;
}

}  // namespace detail

/// Value of a matrix game with at most 3 rows and 3 columns by enumerating
/// square submatrices: each candidate kernel K with cofactor sum S != 0 gives
/// equalizing strategies 1^T adj(K) / S, adj(K) 1 / S and value det(K) / S;
/// the first candidate whose strategies are optimal in the full game wins.
inline Rational brute_minimax(const MatrixGame& m) {
  check_matrix_game(m);
  if (m.rows() > 3 || m.cols() > 3) throw InputError("brute_minimax handles at most 3x3 matrices");
  std::optional<Rational> value;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()) && !value; ++k) {
    detail::for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      return detail::for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        const Matrix<Rational> sub = m.submatrix(rows, cols);
        const Matrix<Rational> adj = detail::adjugate(sub);
        Rational S(0);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) S += adj(i, j);
        if (S == 0) return false;
        const Rational v = detail::small_det(sub) / S;
        std::vector<Rational> x(m.rows()), y(m.cols());
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) {
            x[rows[b]] += adj(a, b) / S;
            y[cols[a]] += adj(a, b) / S;
          }
        for (const auto& t : x)
          if (t < 0) return false;
        for (const auto& t : y)
          if (t < 0) return false;
        for (std::size_t j = 0; j < m.cols(); ++j) {
          Rational acc(0);
          for (std::size_t i = 0; i < m.rows(); ++i) acc += x[i] * m(i, j);
          if (acc < v) return false;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
          Rational acc(0);
          for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * y[j];
          if (acc > v) return false;
        }
        value = v;
        return true;
      });
    });
  }
  if (!value) throw BoundViolation("no kernel produced optimal strategies");
  return *value;
}

}  // namespace zsg
