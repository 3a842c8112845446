#pragma once

// JSON game files:
//   { "n": 2, "actions1": [...], "actions2": [...],
//     "payoff":     [state][i][j]           -> "a/b",
//     "transition": [state][i][j][next]     -> "a/b" }
// Numbers are strings "a/b" (integers may drop "/1"); plain JSON integers
// are accepted on input.

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "zsg/game.hpp"

namespace zsg {

namespace detail {

using Json = nlohmann::json;

inline Rational rational_from_json(const Json& v, const std::string& ctx) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(std::string(e.what()) + " at " + ctx);
    }
  }
  if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>())));
  throw InputError("malformed number at " + ctx + ": expected \"a/b\" string");
}

inline const Json& field(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

inline const Json& array_of(const Json& v, std::size_t len, const std::string& ctx) {
  if (!v.is_array() || v.size() != len) {
    throw InputError("ragged arrays: " + ctx + " must be an array of length " + std::to_string(len));
  }
  return v;
}

inline std::size_t count_from_json(const Json& v, const std::string& ctx) {
  if (!v.is_number_integer() || v.get<long long>() <= 0) throw InputError(ctx + " must be a positive integer");
  return static_cast<std::size_t>(v.get<long long>());
}

inline std::string quoted(const Rational& q) { return "\"" + to_string(q) + "\""; }

}  // namespace detail

inline GameSpec parse_game(const std::string& text) {
  using detail::Json;
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("game file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("game file must be a JSON object");
  GameSpec g;
  g.n = detail::count_from_json(detail::field(doc, "n"), "n");
  const Json& a1 = detail::array_of(detail::field(doc, "actions1"), g.n, "actions1");
  const Json& a2 = detail::array_of(detail::field(doc, "actions2"), g.n, "actions2");
  for (std::size_t s = 0; s < g.n; ++s) {
    g.actions1.push_back(detail::count_from_json(a1[s], "actions1[" + std::to_string(s + 1) + "]"));
    g.actions2.push_back(detail::count_from_json(a2[s], "actions2[" + std::to_string(s + 1) + "]"));
  }
  const Json& pay = detail::array_of(detail::field(doc, "payoff"), g.n, "payoff");
  const Json& tr = detail::array_of(detail::field(doc, "transition"), g.n, "transition");
  for (std::size_t s = 0; s < g.n; ++s) {
    const std::string st = "state " + std::to_string(s + 1);
    const std::size_t p = g.actions1[s], q = g.actions2[s];
    Matrix<Rational> pm(p, q);
    Matrix<std::vector<Rational>> tm(p, q);
    detail::array_of(pay[s], p, "payoff of " + st);
    detail::array_of(tr[s], p, "transition of " + st);
    for (std::size_t i = 0; i < p; ++i) {
      detail::array_of(pay[s][i], q, "payoff row " + std::to_string(i + 1) + " of " + st);
      detail::array_of(tr[s][i], q, "transition row " + std::to_string(i + 1) + " of " + st);
      for (std::size_t j = 0; j < q; ++j) {
        const std::string ctx = detail::where(s, i, j);
        pm(i, j) = detail::rational_from_json(pay[s][i][j], "payoff " + ctx);
        detail::array_of(tr[s][i][j], g.n, "transition " + ctx);
        for (std::size_t t = 0; t < g.n; ++t) {
          tm(i, j).push_back(detail::rational_from_json(tr[s][i][j][t], "transition " + ctx));
        }
      }
    }
    g.payoff.push_back(std::move(pm));
    g.transition.push_back(std::move(tm));
  }
  validate(g);
  return g;
}

/// Canonical text form; parse_game(render_game(g)) == g.
inline std::string render_game(const GameSpec& g) {
  std::ostringstream out;
  auto counts = [&](const std::vector<std::size_t>& v) {
    out << "[";
    for (std::size_t s = 0; s < v.size(); ++s) out << (s ? ", " : "") << v[s];
    out << "]";
  };
  out << "{\n  \"n\": " << g.n << ",\n  \"actions1\": ";
  counts(g.actions1);
  out << ",\n  \"actions2\": ";
  counts(g.actions2);
  out << ",\n  \"payoff\": [\n";
  for (std::size_t s = 0; s < g.n; ++s) {
    out << "    [";
    for (std::size_t i = 0; i < g.actions1[s]; ++i) {
      out << (i ? ", [" : "[");
      for (std::size_t j = 0; j < g.actions2[s]; ++j) out << (j ? ", " : "") << detail::quoted(g.payoff[s](i, j));
      out << "]";
    }
    out << "]" << (s + 1 < g.n ? "," : "") << "\n";
  }
  out << "  ],\n  \"transition\": [\n";
  for (std::size_t s = 0; s < g.n; ++s) {
    out << "    [";
    for (std::size_t i = 0; i < g.actions1[s]; ++i) {
      out << (i ? ", [" : "[");
      for (std::size_t j = 0; j < g.actions2[s]; ++j) {
        out << (j ? ", [" : "[");
        const auto& row = g.transition[s](i, j);
        for (std::size_t t = 0; t < row.size(); ++t) out << (t ? ", " : "") << detail::quoted(row[t]);
        out << "]";
      }
      out << "]";
    }
    out << "]" << (s + 1 < g.n ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

inline GameSpec load_game(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open game file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_game(buf.str());
}

}  // namespace zsg
