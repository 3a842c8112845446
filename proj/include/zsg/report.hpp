#pragma once

// JSON records for solver results. Big numbers are strings: integers in
// decimal, rationals as "a/b", dyadics as "m/2^e".

#include <string>

#include "json.hpp"
#include "zsg/discounted.hpp"
#include "zsg/limit.hpp"
#include "zsg/oracle.hpp"

namespace zsg {

inline constexpr const char* kReportSchema = "zsg-report/1";

using Json = nlohmann::ordered_json;

inline Json to_json(const IntPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return Json{{"coefficients", coeffs}, {"degree", p.degree()}, {"text", p.to_string()}};
}

inline Json to_json(const AlgebraicNumber& a) {
  Json j = to_json(a.poly);
  j["interval"] = Json::array({a.lo.to_string(), a.hi.to_string()});
  j["certified"] = a.certified();
  return j;
}

inline Json to_json(const BoundSet& b) {
  return Json{{"C", b.C}, {"s", b.s}, {"r", b.r}, {"degree_bound", b.q}};
}

inline Json audit_json(const ApproxResult& a) {
  return Json{{"iterations", a.iterations},
              {"iteration_budget", a.r},
              {"peak_entry_bits", a.peak_entry_bits},
              {"entry_bit_bound", a.entry_bound},
              {"zero_midpoint", a.hit_zero}};
}

inline Json game_summary(const NormalizedGame& g) {
  return Json{{"states", g.n()},
              {"row_profiles", profile_count(g.spec, Player::one)},
              {"col_profiles", profile_count(g.spec, Player::two)},
              {"N", g.N.get_str()},
              {"payoff_map", Json{{"scale", to_string(g.affine.scale)}, {"offset", to_string(g.affine.offset)}}}};
}

inline Json to_json(const ValueIterationResult& v) {
  Json vals = Json::array();
  for (const auto& x : v.values) vals.push_back(to_string(x));
  return Json{{"values", vals}, {"iterations", v.iterations}, {"tolerance", to_string(v.tolerance)}};
}

}  // namespace zsg
