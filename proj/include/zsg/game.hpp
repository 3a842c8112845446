#pragma once

// The stochastic game model: raw games, games normalised onto the 1/N grid, and pure
// stationary profiles.

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "zsg/matrix.hpp"
#include "zsg/rational.hpp"

namespace zsg {

enum class Player { one = 1, two = 2 };

/// Finite two-player zero-sum stochastic game with rational data. States and
/// actions are 0-based here; files and diagnostics use 1-based indices.
struct GameSpec {
  std::size_t n = 0;
  std::vector<std::size_t> actions1;
  std::vector<std::size_t> actions2;
  // payoff[state](i, j)
  std::vector<Matrix<Rational>> payoff;
  // transition[state](i, j)[next state]
  std::vector<Matrix<std::vector<Rational>>> transition;

  std::size_t actions(Player p, std::size_t state) const {
    return p == Player::one ? actions1[state] : actions2[state];
  }

  friend bool operator==(const GameSpec&, const GameSpec&) = default;
};

namespace detail {
inline std::string where(std::size_t state, std::size_t i, std::size_t j) {
  return "state " + std::to_string(state + 1) + ", actions (" + std::to_string(i + 1) + "," +
         std::to_string(j + 1) + ")";
}
}  // namespace detail

inline void validate(const GameSpec& g) {
  if (g.n == 0) throw InputError("game must have at least one state");
  if (g.actions1.size() != g.n || g.actions2.size() != g.n) {
    throw InputError("ragged arrays: actions1/actions2 must have n entries");
  }
  if (g.payoff.size() != g.n || g.transition.size() != g.n) {
    throw InputError("ragged arrays: payoff/transition must have n entries");
  }
  for (std::size_t s = 0; s < g.n; ++s) {
    if (g.actions1[s] == 0 || g.actions2[s] == 0) {
      throw InputError("state " + std::to_string(s + 1) + " has an empty action set");
    }
    if (g.payoff[s].rows() != g.actions1[s] || g.payoff[s].cols() != g.actions2[s] ||
        g.transition[s].rows() != g.actions1[s] || g.transition[s].cols() != g.actions2[s]) {
      throw InputError("ragged arrays: state " + std::to_string(s + 1) + " does not match its action counts");
    }
    for (std::size_t i = 0; i < g.actions1[s]; ++i) {
      for (std::size_t j = 0; j < g.actions2[s]; ++j) {
        const auto& row = g.transition[s](i, j);
        if (row.size() != g.n) throw InputError("ragged arrays: transition row at " + detail::where(s, i, j));
        Rational total(0);
        for (const Rational& p : row) {
          if (p < 0) throw InputError("negative probability at " + detail::where(s, i, j));
          total += p;
        }
        if (total != 1) {
          throw InputError("row sum ≠ 1 at " + detail::where(s, i, j) + " (sum " + to_string(total) + ")");
        }
      }
    }
  }
}

/// g' = scale * g + offset, scale > 0. Values transform the same way.
struct AffineMap {
  Rational scale{1};
  Rational offset{0};

  Rational apply(const Rational& g) const { return Rational(scale * g + offset); }
  Rational invert(const Rational& v) const { return rational_div(Rational(v - offset), scale); }
  bool identity() const { return scale == 1 && offset == 0; }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// A game on the 1/N grid: every payoff and transition probability is a
/// multiple of 1/N in [0, 1]. `raw` is the game before the affine payoff map.
struct NormalizedGame {
  GameSpec spec;
  Integer N{1};
  AffineMap affine;
  GameSpec raw;
  // All raw payoffs are equal; every value of the game is that payoff.
  bool constant_payoff = false;

  std::size_t n() const { return spec.n; }

  // The same game read on the 1/M grid, M a multiple of N.
  NormalizedGame with_denominator(const Integer& M) const {
    if (M <= 0 || M % N != 0) {
      throw InputError("denominator " + M.get_str() + " is not a positive multiple of N = " + N.get_str());
    }
    NormalizedGame g = *this;
    g.N = M;
    return g;
  }
};

inline Rational min_payoff(const GameSpec& g) {
  Rational lo = g.payoff[0](0, 0);
  for (const auto& m : g.payoff)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (const Rational& x : m.row(i)) lo = std::min(lo, x);
  return lo;
}

inline Rational max_payoff(const GameSpec& g) {
  Rational hi = g.payoff[0](0, 0);
  for (const auto& m : g.payoff)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (const Rational& x : m.row(i)) hi = std::max(hi, x);
  return hi;
}

/// Least N such that every payoff and probability is a multiple of 1/N.
inline Integer common_denominator(const GameSpec& g) {
  Integer N(1);
  for (std::size_t s = 0; s < g.n; ++s) {
    for (std::size_t i = 0; i < g.actions1[s]; ++i) {
      for (std::size_t j = 0; j < g.actions2[s]; ++j) {
        N = lcm(N, g.payoff[s](i, j).get_den());
        for (const Rational& p : g.transition[s](i, j)) N = lcm(N, p.get_den());
      }
    }
  }
  return N;
}

/// Maps payoffs into [0, 1]. Games whose payoffs already lie in [0, 1] keep
/// the identity map; otherwise g' = (g - C-)/(C+ - C-), or g' = g - C when
/// all payoffs equal C.
inline NormalizedGame normalize(const GameSpec& game) {
  validate(game);
  NormalizedGame out;
  out.raw = game;
  const Rational lo = min_payoff(game);
  const Rational hi = max_payoff(game);
  out.constant_payoff = (lo == hi);
  if (lo >= 0 && hi <= 1) {
    out.affine = AffineMap{};
  } else if (lo == hi) {
    out.affine = AffineMap{Rational(1), Rational(-lo)};
  } else {
    Rational width = hi - lo;
    out.affine = AffineMap{rational_div(Rational(1), width), rational_div(Rational(-lo), width)};
  }
  out.spec = game;
  if (!out.affine.identity()) {
    for (auto& m : out.spec.payoff)
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (Rational& x : m.row(i)) x = out.affine.apply(x);
  }
  out.N = common_denominator(out.spec);
  return out;
}

/// Wraps a game whose payoffs already lie in [0, 1] (identity map).
inline NormalizedGame require_hn(const GameSpec& game) {
  NormalizedGame g = normalize(game);
  if (!g.affine.identity()) {
    throw InputError("game payoffs are outside [0, 1]; exact solvers need payoffs in [0, 1]");
  }
  return g;
}

/// One pure stationary strategy: an action index (0-based) per state.
struct PureProfile {
  std::vector<std::size_t> choice;

  friend bool operator==(const PureProfile&, const PureProfile&) = default;
  friend auto operator<=>(const PureProfile&, const PureProfile&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t l = 0; l < choice.size(); ++l) {
      if (l) s += ",";
      s += std::to_string(choice[l] + 1);
    }
    return s + ")";
  }
};

inline std::size_t profile_count(const GameSpec& g, Player p) {
  std::size_t count = 1;
  for (std::size_t s = 0; s < g.n; ++s) {
    std::size_t a = g.actions(p, s);
    if (count > std::numeric_limits<std::size_t>::max() / a) throw InputError("too many pure stationary profiles");
    count *= a;
  }
  return count;
}

/// All pure stationary profiles of one player, in lexicographic order of
/// (choice[1], ..., choice[n]) with state 1 most significant.
inline std::vector<PureProfile> enumerate_profiles(const GameSpec& g, Player p) {
  const std::size_t total = profile_count(g, p);
  std::vector<PureProfile> out;
  out.reserve(total);
  PureProfile cur{std::vector<std::size_t>(g.n, 0)};
  for (std::size_t k = 0; k < total; ++k) {
    out.push_back(cur);
    for (std::size_t s = g.n; s-- > 0;) {
      if (++cur.choice[s] < g.actions(p, s)) break;
      cur.choice[s] = 0;
    }
  }
  return out;
}

inline std::vector<PureProfile> enumerate_profiles(const NormalizedGame& g, Player p) {
  return enumerate_profiles(g.spec, p);
}

}  // namespace zsg
