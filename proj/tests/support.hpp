#pragma once

// Seeded generators shared by the unit and acceptance tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zsg/zsg.hpp"

#ifndef ZSG_CORPUS_DIR
#define ZSG_CORPUS_DIR "corpus"
#endif

namespace zsg::fixture {

inline GameSpec corpus_game(const std::string& name) {
  return load_game(std::string(ZSG_CORPUS_DIR) + "/" + name + ".json");
}

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long max_num, long max_den) {
    return make_rational(Integer(uniform(-max_num, max_num)), Integer(uniform(1, max_den)));
  }

  Matrix<Rational> matrix(std::size_t p, std::size_t q, long max_num = 9, long max_den = 5) {
    Matrix<Rational> m(p, q);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j) m(i, j) = rational(max_num, max_den);
    return m;
  }

  // N units of probability split over n states.
  std::vector<Rational> distribution(std::size_t n, long N) {
    std::vector<long> units(n, 0);
    for (long u = 0; u < N; ++u) ++units[static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1))];
    std::vector<Rational> out;
    for (long u : units) out.push_back(make_rational(Integer(u), Integer(N)));
    return out;
  }

  // Payoffs and probabilities multiples of 1/N in [0, 1].
  GameSpec game(std::size_t n, std::size_t max_actions, long N) {
    GameSpec g;
    g.n = n;
    for (std::size_t s = 0; s < n; ++s) {
      const std::size_t p = static_cast<std::size_t>(uniform(1, static_cast<long>(max_actions)));
      const std::size_t q = static_cast<std::size_t>(uniform(1, static_cast<long>(max_actions)));
      g.actions1.push_back(p);
      g.actions2.push_back(q);
      Matrix<Rational> pay(p, q);
      Matrix<std::vector<Rational>> tr(p, q);
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j) {
          pay(i, j) = make_rational(Integer(uniform(0, N)), Integer(N));
          tr(i, j) = distribution(n, N);
        }
      g.payoff.push_back(std::move(pay));
      g.transition.push_back(std::move(tr));
    }
    validate(g);
    return g;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

// Single-state game with the given payoff matrix.
inline GameSpec one_state(const Matrix<Rational>& m) {
  GameSpec g;
  g.n = 1;
  g.actions1 = {m.rows()};
  g.actions2 = {m.cols()};
  g.payoff = {m};
  Matrix<std::vector<Rational>> tr(m.rows(), m.cols(), std::vector<Rational>{Rational(1)});
  g.transition = {tr};
  return g;
}

}  // namespace zsg::fixture
