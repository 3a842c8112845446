// zsg: command-line front end for the stochastic game solvers.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zsg/report.hpp"
#include "zsg/zsg.hpp"

namespace fs = std::filesystem;
using namespace zsg;

#ifndef ZSG_CORPUS_DIR
#define ZSG_CORPUS_DIR "corpus"
#endif

namespace {

std::string corpus_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("ZSG_CORPUS_DIR")) return env;
  return ZSG_CORPUS_DIR;
}

std::vector<std::string> corpus_names(const std::string& dir) {
  std::vector<std::string> names;
  std::error_code ec;
  for (const auto& e : fs::directory_iterator(dir, ec))
    if (e.path().extension() == ".json") names.push_back(e.path().stem().string());
  if (ec) throw InputError("cannot read corpus directory '" + dir + "'");
  std::sort(names.begin(), names.end());
  return names;
}

// A path, or the name of a bundled instance.
GameSpec open_game(const std::string& arg, const std::string& dir) {
  if (fs::exists(arg)) return load_game(arg);
  const fs::path bundled = fs::path(dir) / (arg + ".json");
  if (fs::exists(bundled)) return load_game(bundled.string());
  throw InputError("cannot open game file '" + arg + "'");
}

// "2^-t", "a/b" or "a"
Rational parse_tolerance(const std::string& text) {
  if (text.rfind("2^-", 0) == 0) {
    Integer t;
    if (!detail::parse_integer(text.substr(3), t) || t < 0 || !t.fits_ulong_p())
      throw InputError("malformed tolerance '" + text + "'");
    return make_rational(Integer(1), pow2(t.get_ui()));
  }
  return parse_rational(text);
}

std::size_t state_index(std::size_t k, const NormalizedGame& g) {
  if (k < 1 || k > g.n()) throw InputError("state must lie in 1.." + std::to_string(g.n()));
  return k - 1;
}

ThresholdMode threshold_mode(const std::string& s) {
  if (s == "tight") return ThresholdMode::tight;
  if (s == "simple") return ThresholdMode::simple;
  throw InputError("threshold must be 'simple' or 'tight'");
}

DegreeBound degree_mode(const std::string& s) {
  if (s == "tight") return DegreeBound::tight;
  if (s == "full") return DegreeBound::full;
  throw InputError("degree bound must be 'tight' or 'full'");
}

// Parses "a,b;c,d" into a matrix.
MatrixGame parse_matrix(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<Rational> cells;
    std::stringstream cs(row);
    std::string cell;
    while (std::getline(cs, cell, ',')) {
      cell.erase(0, cell.find_first_not_of(" \t"));
      cell.erase(cell.find_last_not_of(" \t") + 1);
      cells.push_back(parse_rational(cell));
    }
    if (!rows.empty() && cells.size() != rows[0].size()) throw InputError("ragged matrix rows");
    rows.push_back(std::move(cells));
  }
  if (rows.empty() || rows[0].empty()) throw InputError("empty matrix");
  MatrixGame m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

ApproxOptions progress_options(bool enabled, const std::string& label) {
  ApproxOptions opt;
  if (!enabled) return opt;
  opt.progress = [label, last = std::uint64_t(0)](std::uint64_t done, std::uint64_t total) mutable {
    const std::uint64_t pct = total ? done * 100 / total : 100;
    if (pct != last || done == 1) {
      std::cerr << "\r[" << label << "] bisection " << done << "/" << total << " (" << pct << "%)" << std::flush;
      last = pct;
    }
  };
  return opt;
}

Json interval_json(const Dyadic& lo, const Dyadic& hi) { return Json::array({lo.to_string(), hi.to_string()}); }

// Value interval in the raw payoff scale.
Json raw_interval(const NormalizedGame& g, const Rational& lo, const Rational& hi) {
  return Json::array({to_string(g.affine.invert(lo)), to_string(g.affine.invert(hi))});
}

struct Common {
  std::string game;
  std::size_t state = 1;
  bool timing = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for zero-sum stochastic games"};
  app.require_subcommand(1);
  std::string corpus_flag;
  app.add_option("--corpus-dir", corpus_flag, "Directory of bundled instances");

  Common common;
  std::string lambda_text, eps_text = "2^-30", threshold = "tight", degree = "tight", matrix_text;
  std::uint64_t bits = 0;
  bool exact = false, direct = false, rounded = false, quiet = false;

  auto* sd = app.add_subcommand("solve-discounted", "Discounted value v^k_lambda");
  sd->add_option("--game", common.game, "Game file or corpus name")->required();
  sd->add_option("--state", common.state, "Initial state (1-based)")->default_val(1);
  sd->add_option("--lambda", lambda_text, "Discount factor a/b")->required();
  sd->add_option("--bits", bits, "Precision r")->required();
  sd->add_flag("--exact", exact, "Reconstruct the exact algebraic value");
  sd->add_option("--degree-bound", degree, "tight = min(|I|,|J|), full = |I|")->default_val("tight");
  sd->add_flag("--timing", common.timing, "Include wall-clock time");
  sd->add_flag("--quiet", quiet, "No progress on stderr");

  auto* sl = app.add_subcommand("solve-limit", "Limit value as lambda -> 0");
  sl->add_option("--game", common.game, "Game file or corpus name")->required();
  sl->add_option("--state", common.state, "Initial state (1-based)")->default_val(1);
  sl->add_option("--bits", bits, "Precision r")->default_val(4);
  sl->add_flag("--exact", exact, "Reconstruct the exact algebraic limit (slow)");
  sl->add_flag("--direct", direct, "Bisect at lambda_r with precision r");
  sl->add_option("--threshold", threshold, "simple or tight")->default_val("tight");
  sl->add_option("--degree-bound", degree, "tight = min(|I|,|J|), full = |I|")->default_val("tight");
  sl->add_flag("--timing", common.timing, "Include wall-clock time");
  sl->add_flag("--quiet", quiet, "No progress on stderr");

  auto* lt = app.add_subcommand("lambda-threshold", "Discount threshold lambda_r");
  lt->add_option("--game", common.game, "Game file or corpus name")->required();
  lt->add_option("--bits", bits, "Precision r")->required();
  lt->add_option("--threshold", threshold, "simple or tight")->default_val("tight");

  auto* mg = app.add_subcommand("matgame", "Value of a matrix game");
  mg->add_option("--matrix", matrix_text, "Rows separated by ';', entries by ','")->required();
  mg->add_flag("--timing", common.timing, "Include wall-clock time");

  auto* orc = app.add_subcommand("oracle", "Reference computations");
  orc->require_subcommand(1);
  auto* vi = orc->add_subcommand("value-iteration", "Shapley value iteration");
  vi->add_option("--game", common.game, "Game file or corpus name")->required();
  vi->add_option("--lambda", lambda_text, "Discount factor a/b")->required();
  vi->add_option("--eps", eps_text, "Tolerance 2^-t or a/b")->default_val("2^-30");
  vi->add_flag("--rounded", rounded, "Round iterates to a dyadic grid");
  vi->add_flag("--timing", common.timing, "Include wall-clock time");

  auto* cp = app.add_subcommand("corpus", "Bundled instances");
  cp->require_subcommand(1);
  auto* cl = cp->add_subcommand("list", "List bundled instances");
  std::string show_name;
  auto* cs = cp->add_subcommand("show", "Print a bundled instance");
  cs->add_option("name", show_name, "Instance name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Json out;
  out["schema"] = kReportSchema;
  try {
    const std::string dir = corpus_dir(corpus_flag);
    if (*sd) {
      out["command"] = "solve-discounted";
      const NormalizedGame base = normalize(open_game(common.game, dir));
      const Rational lambda = parse_rational(lambda_text);
      check_discount(lambda);
      const NormalizedGame g = lift_for_lambda(base, lambda);
      const std::size_t k = state_index(common.state, g);
      out["game"] = game_summary(g);
      out["input"] = Json{{"state", common.state}, {"lambda", to_string(lambda)}, {"bits", bits}};
      if (exact) {
        ExactResult ex = exact_value(g, lambda, k, degree_mode(degree), progress_options(!quiet, "exact"));
        if (!quiet) std::cerr << "\n";
        out["bounds"] = to_json(ex.bounds);
        out["exact"] = to_json(ex.value);
        const ApproxResult a = approx_value(g, lambda, k, bits);
        out["result"] = Json{{"u", a.u.get_str()}, {"interval", interval_json(a.lo(), a.hi())}};
        out["audit"] = audit_json(a);
        out["exact_audit"] = audit_json(ex.approx);
      } else {
        const ApproxResult a = approx_value(g, lambda, k, bits);
        out["result"] = Json{{"u", a.u.get_str()}, {"interval", interval_json(a.lo(), a.hi())}};
        if (!g.affine.identity())
          out["result"]["raw_interval"] = raw_interval(g, a.lo().to_rational(), a.hi().to_rational());
        out["bounds"] = to_json(compute_bounds(g, degree_mode(degree)));
        out["audit"] = audit_json(a);
      }
    } else if (*sl) {
      out["command"] = "solve-limit";
      const NormalizedGame g = normalize(open_game(common.game, dir));
      const std::size_t k = state_index(common.state, g);
      const ThresholdMode mode = threshold_mode(threshold);
      out["game"] = game_summary(g);
      out["input"] = Json{{"state", common.state}, {"bits", bits}, {"threshold", threshold}};
      if (exact) {
        ExactResult ex = limit_exact(g, k, degree_mode(degree), mode, progress_options(!quiet, "limit-exact"));
        if (!quiet) std::cerr << "\n";
        out["bounds"] = to_json(ex.bounds);
        out["exact"] = to_json(ex.value);
        out["exact_audit"] = audit_json(ex.approx);
      } else if (direct) {
        const ApproxResult a = limit_approx_direct(g, k, bits, mode);
        out["result"] = Json{{"method", "direct"},
                             {"u", a.u.get_str()},
                             {"lambda_exponent", bits ? threshold_exponent(threshold_params(g, mode), bits) : 0},
                             {"interval", interval_json(a.lo(), a.hi())}};
        if (!g.affine.identity())
          out["result"]["raw_interval"] = raw_interval(g, a.lo().to_rational(), a.hi().to_rational());
        out["audit"] = audit_json(a);
      } else {
        const ApproxResult a = limit_approx_fast(g, k, bits, mode);
        // |limit - u 2^-(r+1)| <= 2^-r
        const Dyadic center{a.u, bits + 1};
        const Dyadic lo{Integer(a.u - 2), bits + 1}, hi{Integer(a.u + 2), bits + 1};
        out["result"] = Json{{"method", "fast"},
                             {"u", a.u.get_str()},
                             {"estimate", center.to_string()},
                             {"lambda_exponent", threshold_exponent(threshold_params(g, mode), bits + 1)},
                             {"interval", interval_json(lo, hi)}};
        if (!g.affine.identity()) out["result"]["raw_interval"] = raw_interval(g, lo.to_rational(), hi.to_rational());
        out["audit"] = audit_json(a);
      }
    } else if (*lt) {
      out["command"] = "lambda-threshold";
      const NormalizedGame g = normalize(open_game(common.game, dir));
      const ThresholdMode mode = threshold_mode(threshold);
      const ThresholdParams p = threshold_params(g, mode);
      const std::uint64_t e = threshold_exponent(p, bits);
      out["game"] = game_summary(g);
      out["input"] = Json{{"bits", bits}, {"threshold", threshold}};
      out["exponent"] = e;
      out["lambda"] = "1/2^" + std::to_string(e);
      out["simple_exponent"] = simple_exponent(p, bits);
      out["tight_exponent"] = tight_exponent(p, bits);
      ThresholdParams raw = p;
      raw.N = common_denominator(g.raw);
      out["raw_game"] = Json{{"N", raw.N.get_str()}, {"exponent", threshold_exponent(raw, bits)}};
      out["bounds"] = to_json(compute_bounds(g));
    } else if (*mg) {
      out["command"] = "matgame";
      const MatrixGame m = parse_matrix(matrix_text);
      const GameSolution sol = lp_value(m);
      Json x = Json::array(), y = Json::array();
      for (const auto& v : sol.x) x.push_back(to_string(v));
      for (const auto& v : sol.y) y.push_back(to_string(v));
      out["result"] = Json{{"value", to_string(sol.value)}, {"row_strategy", x}, {"column_strategy", y}};
      out["audit"] = Json{{"pivots", sol.pivots}};
      if (m.rows() <= 4 && m.cols() <= 4) {
        if (auto hit = shapley_snow_kernel(m)) {
          Json rows = Json::array(), cols = Json::array();
          for (auto r : hit->rows) rows.push_back(r + 1);
          for (auto c : hit->cols) cols.push_back(c + 1);
          out["kernel"] = Json{{"rows", rows}, {"cols", cols}, {"det_over_cofactor_sum", to_string(hit->ratio)}};
        }
      }
    } else if (*vi) {
      out["command"] = "oracle value-iteration";
      const NormalizedGame g = normalize(open_game(common.game, dir));
      const Rational lambda = parse_rational(lambda_text);
      const Rational eps = parse_tolerance(eps_text);
      ValueIterationOptions opt;
      opt.rounded = rounded;
      const ValueIterationResult r = value_iteration(g.raw, lambda, eps, opt);
      out["input"] = Json{{"lambda", to_string(lambda)}, {"eps", to_string(eps)}, {"rounded", rounded}};
      out["result"] = to_json(r);
    } else if (*cl) {
      out["command"] = "corpus list";
      out["instances"] = corpus_names(dir);
    } else if (*cs) {
      std::cout << render_game(open_game(show_name, dir));
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BoundViolation& e) {
    std::cerr << "bound violation: " << e.what() << "\n";
    return 3;
  }
  if (common.timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out["timing_ms"] = ms;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}
