// Discounted value of matching pennies at lambda = 1/2, then its exact form.
#include <iostream>

#include "zsg/zsg.hpp"

int main() {
  using namespace zsg;
  MatrixGame m{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  GameSpec g;
  g.n = 1;
  g.actions1 = {2};
  g.actions2 = {2};
  g.payoff = {m};
  g.transition = {Matrix<std::vector<Rational>>(2, 2, std::vector<Rational>{Rational(1)})};

  const Rational lambda(1, 2);
  NormalizedGame ng = lift_for_lambda(normalize(g), lambda);

  ApproxResult a = approx_value(ng, lambda, 0, 10);
  std::cout << "v in [" << a.lo().to_string() << ", " << a.hi().to_string() << "]\n";

  ExactResult ex = exact_value(ng, lambda, 0);
  std::cout << "minimal polynomial " << ex.value.poly.to_string() << ", root in [" << ex.value.lo.to_string() << ", "
            << ex.value.hi.to_string() << "]\n";
}
