#pragma once

// Lenstra-Lenstra-Lovasz basis reduction with exact rational Gram-Schmidt.

#include <cstddef>
#include <vector>

#include "zsg/rational.hpp"

namespace zsg {

using IntVector = std::vector<Integer>;

inline Integer dot(const IntVector& a, const IntVector& b) {
  Integer s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct GramSchmidt {
  std::vector<std::vector<Rational>> mu;  // mu[i][j], j < i
  std::vector<Rational> norms;            // |b*_i|^2
};

inline GramSchmidt gram_schmidt(const std::vector<IntVector>& basis) {
  const std::size_t m = basis.size();
  GramSchmidt gs{std::vector<std::vector<Rational>>(m, std::vector<Rational>(m)), std::vector<Rational>(m)};
  std::vector<std::vector<Rational>> star(m);
  for (std::size_t i = 0; i < m; ++i) {
    star[i].assign(basis[i].begin(), basis[i].end());
    for (std::size_t j = 0; j < i; ++j) {
      if (gs.norms[j] == 0) continue;
      Rational num(0);
      for (std::size_t t = 0; t < basis[i].size(); ++t) num += star[j][t] * basis[i][t];
      gs.mu[i][j] = num / gs.norms[j];
      for (std::size_t t = 0; t < basis[i].size(); ++t) star[i][t] -= gs.mu[i][j] * star[j][t];
    }
    Rational nn(0);
    for (const auto& x : star[i]) nn += x * x;
    gs.norms[i] = nn;
  }
  return gs;
}

/// Lovasz condition with parameter delta and |mu_ij| <= 1/2 for all j < i.
inline bool is_lll_reduced(const std::vector<IntVector>& basis, const Rational& delta = Rational(3, 4)) {
  GramSchmidt gs = gram_schmidt(basis);
  const Rational half(1, 2);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (abs(gs.mu[i][j]) > half) return false;
    if (i > 0 && gs.norms[i] < (delta - gs.mu[i][i - 1] * gs.mu[i][i - 1]) * gs.norms[i - 1]) return false;
  }
  return true;
}

namespace detail {

inline Integer round_nearest(const Rational& q) {
  return floor_of(Rational(q + Rational(1, 2)));
}

}  // namespace detail

/// Reduces a basis of linearly independent integer vectors (rows).
inline std::vector<IntVector> lll_reduce(std::vector<IntVector> b, const Rational& delta = Rational(3, 4)) {
  const std::size_t m = b.size();
  if (m == 0) return b;
  if (delta <= Rational(1, 4) || delta > 1) throw InputError("LLL parameter must lie in (1/4, 1]");
  for (const auto& v : b)
    if (v.size() != b[0].size()) throw InputError("LLL basis vectors must have equal length");

  GramSchmidt gs = gram_schmidt(b);
  for (const auto& nn : gs.norms)
    if (nn == 0) throw InputError("LLL input basis is linearly dependent");
  auto& mu = gs.mu;
  auto& B = gs.norms;

  auto size_reduce = [&](std::size_t k, std::size_t l) {
    if (abs(mu[k][l]) <= Rational(1, 2)) return;
    const Integer q = detail::round_nearest(mu[k][l]);
    for (std::size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[l][t];
    for (std::size_t j = 0; j < l; ++j) mu[k][j] -= q * mu[l][j];
    mu[k][l] -= q;
  };

  std::size_t k = 1;
  while (k < m) {
    size_reduce(k, k - 1);
    if (B[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
      const Rational u = mu[k][k - 1];
      const Rational bnew = B[k] + u * u * B[k - 1];
      std::swap(b[k], b[k - 1]);
      for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu[k][j], mu[k - 1][j]);
      mu[k][k - 1] = u * B[k - 1] / bnew;
      B[k] = B[k - 1] * B[k] / bnew;
      B[k - 1] = bnew;
      for (std::size_t i = k + 1; i < m; ++i) {
        const Rational t = mu[i][k];
        mu[i][k] = mu[i][k - 1] - u * t;
        mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
      }
      if (k > 1) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 0;) size_reduce(k, l);
      ++k;
    }
  }
  return b;
}

}  // namespace zsg
