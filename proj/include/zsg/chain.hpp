#pragma once

// Evaluation of a pure stationary profile pair: the induced Markov chain,
// the Cramer determinants d0 and dk, and the discounted payoff vector.
//
// States are 0-based in this API.

#include <cstddef>
#include <vector>

#include "zsg/determinant.hpp"
#include "zsg/game.hpp"

namespace zsg {

struct ProfileChain {
  Matrix<Rational> Q;        // row-stochastic transition matrix
  std::vector<Rational> g;   // stage payoff per state
};

inline void check_discount(const Rational& lambda) {
  if (lambda <= 0 || lambda > 1) throw InputError("discount factor must lie in (0, 1], got " + to_string(lambda));
}

inline ProfileChain build_chain(const GameSpec& game, const PureProfile& i, const PureProfile& j) {
  const std::size_t n = game.n;
  if (i.choice.size() != n || j.choice.size() != n) throw InputError("profile length does not match state count");
  ProfileChain c{Matrix<Rational>(n, n), std::vector<Rational>(n)};
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t a = i.choice[s], b = j.choice[s];
    if (a >= game.actions1[s] || b >= game.actions2[s]) throw InputError("profile action out of range");
    c.g[s] = game.payoff[s](a, b);
    const auto& row = game.transition[s](a, b);
    for (std::size_t t = 0; t < n; ++t) c.Q(s, t) = row[t];
  }
  return c;
}

inline ProfileChain build_chain(const NormalizedGame& game, const PureProfile& i, const PureProfile& j) {
  return build_chain(game.spec, i, j);
}

// Id - (1 - lambda) Q
inline Matrix<Rational> discounted_system(const ProfileChain& c, const Rational& lambda) {
  const std::size_t n = c.g.size();
  const Rational keep = 1 - lambda;
  Matrix<Rational> a(n, n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) a(s, t) = Rational((s == t ? 1 : 0) - keep * c.Q(s, t));
  return a;
}

/// det(Id - (1 - lambda) Q); strictly positive for lambda in (0, 1].
inline Rational d0(const ProfileChain& c, const Rational& lambda) {
  check_discount(lambda);
  return bareiss_det(discounted_system(c, lambda));
}

/// det(Id - (1 - lambda) Q) with column k replaced by lambda * g, so that
/// dk / d0 is the k-th coordinate of the solution of
/// gamma = lambda g + (1 - lambda) Q gamma.
inline Rational dk(const ProfileChain& c, const Rational& lambda, std::size_t k) {
  check_discount(lambda);
  if (k >= c.g.size()) throw InputError("state index out of range");
  Matrix<Rational> a = discounted_system(c, lambda);
  for (std::size_t s = 0; s < c.g.size(); ++s) a(s, k) = Rational(lambda * c.g[s]);
  return bareiss_det(a);
}

inline Rational gamma(const ProfileChain& c, const Rational& lambda, std::size_t k) {
  return rational_div(dk(c, lambda, k), d0(c, lambda));
}

/// Solves (Id - (1 - lambda) Q) x = lambda g directly.
inline std::vector<Rational> solve_linear_gamma(const ProfileChain& c, const Rational& lambda) {
  check_discount(lambda);
  std::vector<Rational> rhs(c.g.size());
  for (std::size_t s = 0; s < c.g.size(); ++s) rhs[s] = lambda * c.g[s];
  return solve_fraction_free(discounted_system(c, lambda), rhs);
}

}  // namespace zsg
