#pragma once

// The parameterised matrix game W(lambda, z, k): rows and columns are the
// players' pure stationary profiles, and entry [i, j] = dk(i, j) - z d0(i, j)
// for the chain induced by the profile pair.

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

#include "zsg/chain.hpp"
#include "zsg/game.hpp"
#include "zsg/matrix_game.hpp"

namespace zsg {

struct WMatrix {
  MatrixGame matrix;
  Rational lambda;
  Rational z;
  std::size_t state = 0;
  std::vector<PureProfile> row_profiles;
  std::vector<PureProfile> col_profiles;
};

/// W(lambda, ., k) for one fixed lambda and initial state. The determinants
/// d0 and dk of every profile pair are computed once, up front, so each z
/// costs one multiply-subtract per entry. Immutable after construction.
class WFamily {
 public:
  WFamily(const GameSpec& game, Rational lambda, std::size_t state, unsigned threads = 0)
      : lambda_(std::move(lambda)), state_(state) {
    check_discount(lambda_);
    if (state >= game.n) throw InputError("initial state out of range");
    rows_ = enumerate_profiles(game, Player::one);
    cols_ = enumerate_profiles(game, Player::two);
    d0_ = Matrix<Rational>(rows_.size(), cols_.size());
    dk_ = Matrix<Rational>(rows_.size(), cols_.size());
    fill(game, threads);
  }

  WFamily(const NormalizedGame& game, Rational lambda, std::size_t state, unsigned threads = 0)
      : WFamily(game.spec, std::move(lambda), state, threads) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_.size(); }
  const Rational& lambda() const { return lambda_; }
  std::size_t state() const { return state_; }
  const Rational& d0(std::size_t i, std::size_t j) const { return d0_(i, j); }
  const Rational& dk(std::size_t i, std::size_t j) const { return dk_(i, j); }

  MatrixGame matrix(const Rational& z) const {
    MatrixGame w(rows(), cols());
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols(); ++j) w(i, j) = dk_(i, j) - z * d0_(i, j);
    return w;
  }

  WMatrix build(const Rational& z) const { return WMatrix{matrix(z), lambda_, z, state_, rows_, cols_}; }

  Rational value(const Rational& z) const { return lp_value(matrix(z)).value; }

 private:
  void fill(const GameSpec& game, unsigned threads) {
    const std::size_t total = rows() * cols();
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (total < 64) threads = 1;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t e = begin; e < end; ++e) {
        const std::size_t i = e / cols(), j = e % cols();
        ProfileChain c = build_chain(game, rows_[i], cols_[j]);
        d0_(i, j) = zsg::d0(c, lambda_);
        dk_(i, j) = zsg::dk(c, lambda_, state_);
      }
    };
    if (threads <= 1) {
      work(0, total);
      return;
    }
    // Distinct threads write distinct entries.
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      std::size_t b = t * chunk, e = std::min(total, b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
  }

  Rational lambda_;
  std::size_t state_;
  std::vector<PureProfile> rows_, cols_;
  Matrix<Rational> d0_, dk_;
};

inline WMatrix build_W(const NormalizedGame& game, const Rational& lambda, const Rational& z, std::size_t state) {
  return WFamily(game, lambda, state).build(z);
}

inline WMatrix build_W(const GameSpec& game, const Rational& lambda, const Rational& z, std::size_t state) {
  return WFamily(game, lambda, state).build(z);
}

inline Rational val_W(const NormalizedGame& game, const Rational& lambda, const Rational& z, std::size_t state) {
  return WFamily(game, lambda, state).value(z);
}

}  // namespace zsg
