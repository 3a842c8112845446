#pragma once

// The matrix W^1_lambda(z) of Kohlberg's four-state game as it is usually
// displayed (global factor lambda^2 included), rows and columns in
// lexicographic profile order.

#include "zsg/zsg.hpp"

namespace zsg::fixture {

inline MatrixGame kohlberg_display(const Rational& l, const Rational& z) {
  const Rational one(1);
  const Rational a = l * (1 - z);
  const Rational b = -l * (1 - l) - l * z;
  const Rational c = -(2 * l - l * l) * z;
  const Rational d = -(1 - l) * (1 - l) - z;
  const Rational e = 1 - l - z;
  MatrixGame m{{Rational(l * l * (1 - z)), a, b, c},
               {a, a, c, d},
               {b, c, Rational(l * (1 - z) - l * z), e},
               {c, d, e, e}};
  const Rational f = l * l;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) *= f;
  return m;
}

// Entry (3,3) as the game's definition gives it: lambda^2 (lambda (1 - lambda) - lambda z).
inline Rational kohlberg_entry33_corrected(const Rational& l, const Rational& z) {
  return l * l * (l * (1 - l) - l * z);
}

}  // namespace zsg::fixture
