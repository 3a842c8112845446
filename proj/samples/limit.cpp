// Limit value of a game file: fast approximation, then exact reconstruction.
#include <iostream>

#include "zsg/zsg.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: limit GAME.json [bits]\n";
    return 2;
  }
  using namespace zsg;
  NormalizedGame g = normalize(load_game(argv[1]));
  const std::uint64_t r = argc > 2 ? std::stoul(argv[2]) : 8;

  std::cout << "lambda_" << r << " = 2^-" << threshold_exponent(threshold_params(g), r) << "\n";
  ApproxResult a = limit_approx_fast(g, 0, r);
  std::cout << "limit ~ " << a.u << "/2^" << r + 1 << "\n";

  if (!g.affine.identity()) return 0;  // exact mode needs payoffs in [0, 1]
  ExactResult ex = limit_exact(g, 0);
  std::cout << "exact: " << ex.value.poly.to_string() << "\n";
}
