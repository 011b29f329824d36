// pauc: command-line front end for the counting, divisor, circle-method and
// growth-fit modules.
//
// Exit codes: 0 ok, 1 internal, 2 validation/usage, 3 budget, 4 corrupt
// cache, 5 quadrature not integral. Errors print one line "<kind>: <reason>"
// on stderr.

#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pauc/arcs.hpp"
#include "pauc/errors.hpp"
#include "pauc/int_math.hpp"
#include "pauc/oracle.hpp"
#include "pauc/pair_solver.hpp"
#include "pauc/paucity.hpp"
#include "pauc/psi.hpp"
#include "pauc/quadrature.hpp"
#include "pauc/report_io.hpp"
#include "pauc/table_io.hpp"
#include "pauc/tally.hpp"
#include "pauc/weyl.hpp"

namespace fs = std::filesystem;
using namespace pauc;

namespace {

struct Globals {
  unsigned threads = 1;
  std::string memory_budget = "8G";
  std::string cache_dir;
  std::string format;  // empty: per-command default
  bool no_cache = false;
};

u64 parse_bytes(const std::string& text) {
  if (text.empty()) throw ValidationError("memory budget is empty");
  u64 scale = 1;
  std::string digits = text;
  switch (digits.back()) {
    case 'K': case 'k': scale = u64{1} << 10; digits.pop_back(); break;
    case 'M': case 'm': scale = u64{1} << 20; digits.pop_back(); break;
    case 'G': case 'g': scale = u64{1} << 30; digits.pop_back(); break;
    default: break;
  }
  const i128 v = parse_i128(digits);
  if (v <= 0) throw ValidationError("memory budget must be positive: " + text);
  if (v > static_cast<i128>(~u64{0} / scale)) throw ValidationError("memory budget too large: " + text);
  return static_cast<u64>(v) * scale;
}

std::vector<u64> parse_grid(const std::string& text) {
  std::vector<u64> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const i128 v = parse_i128(item);
    if (v < 1 || v > static_cast<i128>(~u64{0})) throw ValidationError("grid value out of range: " + item);
    grid.push_back(static_cast<u64>(v));
  }
  if (grid.empty()) throw ValidationError("grid is empty");
  return grid;
}

BoxConfig make_box(const Globals& g, u64 B) {
  BoxConfig box;
  box.B = B;
  box.parallel_width = g.threads;
  box.memory_budget = parse_bytes(g.memory_budget);
  box.validate();
  return box;
}

ExponentTriple make_triple(const std::string& kmn) {
  const ExponentTriple t = parse_triple(kmn);
  if (t.degenerate()) throw ValidationError("degenerate triple: " + degeneracy_reason(t));
  return t;
}

bool want_csv(const Globals& g, bool series) {
  if (g.format.empty()) return series;
  return g.format == "csv";
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

fs::path cache_dir(const Globals& g) { return g.cache_dir.empty() ? default_cache_dir() : fs::path(g.cache_dir); }

// Loads the table from the cache when present and well formed, else builds
// and stores it. A version mismatch is rebuilt; corruption propagates.
FreqTable cached_table(const Globals& g, TableKind kind, int lead, int con, u64 B,
                       const std::function<FreqTable()>& build) {
  if (g.no_cache) return build();
  const fs::path path = cache_dir(g) / cache_file_name(kind, lead, con, B);
  if (fs::exists(path)) {
    try {
      FreqTable t = load_table(path);
      if (t.kind() != kind || t.lead_exp() != lead || t.constraint_exp() != con || t.box() != B)
        throw CacheCorrupt("cache header does not match its file name: " + path.string());
      return t;
    } catch (const CacheVersionMismatch& e) {
      std::cerr << "warning: " << e.what() << "; recomputing\n";
    }
  }
  FreqTable t = build();
  fs::create_directories(path.parent_path());
  save_table(path, t);
  return t;
}

int run_table(const Globals& g, TableKind kind, int lead, int con, u64 B,
              const std::vector<std::string>& queries) {
  const BoxConfig box = make_box(g, B);
  const FreqTable t = cached_table(g, kind, lead, con, B, [&] {
    return kind == TableKind::TrailingV ? build_v_table(lead, con, box) : build_u_table(lead, con, box);
  });
  if (queries.size() == 1 && g.format.empty()) {
    std::cout << t.entry(parse_i128(queries.front())) << '\n';
    return 0;
  }
  if (!queries.empty()) {
    if (want_csv(g, true)) {
      std::cout << "key,count\n";
      for (const auto& q : queries) std::cout << to_string(parse_i128(q)) << ',' << t.entry(parse_i128(q)) << '\n';
    } else {
      Json j = Json::array();
      for (const auto& q : queries) j.push_back({{"h", to_json(parse_i128(q))}, {"count", t.entry(parse_i128(q))}});
      emit(j);
    }
    return 0;
  }
  if (want_csv(g, true)) {
    write_table_csv(std::cout, t);
  } else {
    Json j;
    j["kind"] = table_kind_tag(kind);
    j["lead_exp"] = lead;
    j["constraint_exp"] = con;
    j["b"] = B;
    j["size"] = t.size();
    j["total"] = t.total();
    j["zero"] = t.entry(0);
    j["max_count"] = t.max_count();
    emit(j);
  }
  return 0;
}

void require_format(const Globals& g) {
  if (!g.format.empty() && g.format != "json" && g.format != "csv")
    throw ValidationError("format must be json or csv: " + g.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts and diagnostics for the linked diagonal system"};
  app.require_subcommand(1);
  Globals g;
  if (const char* env = std::getenv("PAUC_CACHE_DIR")) g.cache_dir = env;
  app.add_option("--threads", g.threads, "parallel width")->check(CLI::Range(1u, 1024u));
  app.add_option("--memory-budget", g.memory_budget, "table working-set cap (bytes, or K/M/G suffix)");
  app.add_option("--cache-dir", g.cache_dir, "table cache directory (default PAUC_CACHE_DIR or ./.pauc-cache)");
  app.add_option("--format", g.format, "json or csv");
  app.add_flag("--no-cache", g.no_cache, "neither read nor write the table cache");

  std::function<int()> action;

  // count
  std::string kmn;
  u64 B = 1;
  bool verify = false;
  auto* count = app.add_subcommand("count", "exact N(B), T(B), E(B), residual, u(0), v(0)");
  count->add_option("--kmn", kmn)->required();
  count->add_option("--B", B)->required();
  count->add_flag("--verify-oracle", verify, "cross-check against the ten-variable brute force");
  count->callback([&] {
    action = [&] {
      const ExponentTriple t = make_triple(kmn);
      const CountReport r = count_N(t, make_box(g, B));
      if (want_csv(g, false)) {
        write_counts_csv(std::cout, std::span(&r, 1));
        return 0;
      }
      Json j = to_json(r);
      if (verify) {
        const u64 o = oracle::join_count(t, B);
        j["oracle"] = o;
        j["oracle_match"] = o == r.N;
      }
      emit(j);
      return 0;
    };
  });

  // scan
  std::string grid_text;
  VerdictThresholds th;
  auto* scan = app.add_subcommand("scan", "counts over a B-grid, growth fits and verdict");
  scan->add_option("--kmn", kmn)->required();
  scan->add_option("--grid", grid_text, "comma-separated B values (default: standard grid)");
  scan->add_option("--paucity-slope", th.paucity_slope);
  scan->add_option("--max-log-residual", th.max_log_residual);
  scan->add_option("--excess-floor", th.excess_floor);
  scan->callback([&] {
    action = [&] {
      const ExponentTriple t = make_triple(kmn);
      const BoxConfig box = make_box(g, 1);
      const std::vector<u64> grid = grid_text.empty() ? standard_grid(t, box) : parse_grid(grid_text);
      const PaucityReport r = scan_counts(t, grid, box, th);
      if (want_csv(g, true))
        write_counts_csv(std::cout, r.counts);
      else
        emit(to_json(r));
      return 0;
    };
  });

  // vtable / utable
  int k = 0, m = 0, n = 0;
  std::vector<std::string> queries;
  auto* vtable = app.add_subcommand("vtable", "v_{k,m}(h) table over [1,B]^4");
  vtable->add_option("--k", k)->required();
  vtable->add_option("--m", m)->required();
  vtable->add_option("--B", B)->required();
  vtable->add_option("--query", queries, "h values to look up");
  vtable->callback([&] {
    action = [&] {
      ExponentTriple::make(k, m, 1);
      if (k == m) throw ValidationError("degenerate pair: k=m");
      return run_table(g, TableKind::TrailingV, k, m, B, queries);
    };
  });
  auto* utable = app.add_subcommand("utable", "u_{k,n}(h) table over [1,B]^6");
  utable->add_option("--k", k)->required();
  utable->add_option("--n", n)->required();
  utable->add_option("--B", B)->required();
  utable->add_option("--query", queries, "h values to look up");
  utable->callback([&] {
    action = [&] {
      ExponentTriple::make(k, 1, n);
      if (k == n) throw ValidationError("degenerate pair: k=n");
      return run_table(g, TableKind::LeadingU, k, n, B, queries);
    };
  });

  // divisor
  std::string h_text;
  auto* divisor = app.add_subcommand("divisor", "pair-system solutions at fixed h by divisor enumeration");
  divisor->add_option("--k", k)->required();
  divisor->add_option("--m", m)->required();
  divisor->set_help_flag("--help", "print this help and exit");
  divisor->add_option("--h", h_text)->required();
  divisor->add_option("--B", B)->required();
  divisor->callback([&] {
    action = [&] {
      const BoxConfig box = make_box(g, B);
      const i128 h = parse_i128(h_text);
      const auto sols = solve_pair(k, m, h, B, box.parallel_width);
      if (want_csv(g, false)) {
        write_pairs_csv(std::cout, sols);
        return 0;
      }
      Json j;
      j["k"] = k;
      j["m"] = m;
      j["h"] = to_json(h);
      j["b"] = B;
      j["count"] = sols.size();
      Json s = Json::array();
      for (const auto& p : sols) s.push_back(to_json(p));
      j["solutions"] = s;
      emit(j);
      return 0;
    };
  });

  // moment
  int j_exp = 1;
  unsigned s_vars = 3;
  auto* moment = app.add_subcommand("moment", "#{x,y in [1,B]^s : equal k-th and j-th power sums}");
  moment->add_option("--k", k)->required();
  moment->add_option("--j", j_exp)->required();
  moment->add_option("--s", s_vars)->required();
  moment->add_option("--B", B)->required();
  moment->callback([&] {
    action = [&] {
      const u64 c = count_moment(k, j_exp, s_vars, make_box(g, B));
      Json j;
      j["k"] = k;
      j["j"] = j_exp;
      j["s"] = s_vars;
      j["b"] = B;
      j["count"] = c;
      if (want_csv(g, false))
        std::cout << "k,j,s,B,count\n" << k << ',' << j_exp << ',' << s_vars << ',' << B << ',' << c << '\n';
      else
        emit(j);
      return 0;
    };
  });

  // arcs
  double delta = 0.25;
  auto* arcs = app.add_subcommand("arcs", "major-arc dissection and its measure");
  arcs->add_option("--delta", delta)->required();
  arcs->add_option("--B", B)->required();
  arcs->callback([&] {
    action = [&] {
      const ArcDissection d = build_major_arcs(delta, B);
      if (want_csv(g, false))
        write_arcs_csv(std::cout, d);
      else
        emit(to_json(d));
      return 0;
    };
  });

  // weyl
  int k1 = 3, k2 = 1;
  double a1 = 0, a2 = 0;
  bool weyl_scan = false;
  u64 samples = 1024, seed = 0;
  auto* weyl = app.add_subcommand("weyl", "evaluate f_{k1,k2}(a1,a2), or scan its minor-arc sup");
  weyl->add_option("--k1", k1);
  weyl->add_option("--k2", k2);
  weyl->add_option("--B", B)->required();
  weyl->add_option("--alpha", a1);
  weyl->add_option("--beta", a2);
  weyl->add_flag("--scan", weyl_scan, "sup of |f_{3,1}| over random minor-arc points");
  weyl->add_option("--delta", delta);
  weyl->add_option("--samples", samples);
  weyl->add_option("--seed", seed);
  weyl->callback([&] {
    action = [&] {
      const BoxConfig box = make_box(g, B);
      Json j;
      if (weyl_scan) {
        const WeylScan sc = minor_arc_weyl_scan(delta, B, samples, seed, box.parallel_width);
        j = to_json(sc);
        j["delta"] = delta;
        j["b"] = B;
        j["ratio"] = sc.sup / std::pow(static_cast<double>(B), 1.0 - delta / 4.0);
      } else {
        ExponentTriple::make(k1, k2, 1);
        const auto f = eval_weyl(WeylSum{k1, k2, B}, a1, a2);
        j["k1"] = k1;
        j["k2"] = k2;
        j["b"] = B;
        j["alpha"] = a1;
        j["beta"] = a2;
        j["re"] = f.real();
        j["im"] = f.imag();
        j["abs"] = std::abs(f);
      }
      emit(j);
      return 0;
    };
  });

  // quadrature
  u64 grid_budget = kDefaultGridBudget;
  auto* quad = app.add_subcommand("quadrature", "N(B) from the orthogonality integral on exact grids");
  quad->add_option("--kmn", kmn)->required();
  quad->add_option("--B", B)->required();
  quad->add_option("--grid-budget", grid_budget);
  quad->callback([&] {
    action = [&] {
      const ExponentTriple t = make_triple(kmn);
      const BoxConfig box = make_box(g, B);
      Json j = to_json(quadrature_count(t, B, box.parallel_width, grid_budget));
      j["triple"] = to_json(t);
      j["b"] = B;
      emit(j);
      return 0;
    };
  });

  // classify
  auto* cls = app.add_subcommand("classify", "case of an exponent triple");
  cls->add_option("--kmn", kmn)->required();
  cls->callback([&] {
    action = [&] {
      const ExponentTriple t = parse_triple(kmn);
      const TripleClass c = classify(t);
      Json j;
      j["triple"] = to_json(t);
      j["class"] = std::string(to_string(c));
      j["paucity_case"] = is_paucity_case(c);
      j["degenerate_reason"] = degeneracy_reason(t);
      emit(j);
      return 0;
    };
  });

  // diagonal
  auto* diag = app.add_subcommand("diagonal", "diagonal count T(B) and its block factors");
  diag->add_option("--B", B)->required();
  diag->callback([&] {
    action = [&] {
      make_box(g, B);
      Json j;
      j["b"] = B;
      j["triples"] = diagonal_triples(B);
      j["pairs"] = diagonal_pairs(B);
      j["t"] = count_T_exact(B);
      emit(j);
      return 0;
    };
  });

  // taxicab
  auto* taxi = app.add_subcommand("taxicab", "non-diagonal solutions of x1^m + x2^m = y1^m + y2^m");
  taxi->add_option("--m", m)->required();
  taxi->add_option("--B", B)->required();
  taxi->callback([&] {
    action = [&] {
      const BoxConfig box = make_box(g, B);
      Json j;
      j["m"] = m;
      j["b"] = B;
      j["count"] = count_w(m, B, box.parallel_width);
      emit(j);
      return 0;
    };
  });

  // psi
  int which = 1;
  std::string d1_text, d2_text;
  auto* psi = app.add_subcommand("psi", "coefficients of the auxiliary polynomial psi1 or psi2");
  psi->add_option("--which", which)->check(CLI::IsMember({1, 2}));
  psi->add_option("--k", k)->required();
  psi->add_option("--d1", d1_text)->required();
  psi->add_option("--d2", d2_text)->required();
  psi->callback([&] {
    action = [&] {
      const i128 d1 = parse_i128(d1_text), d2 = parse_i128(d2_text);
      const PsiPolynomial p = which == 1 ? build_psi1(k, d1, d2) : build_psi2(k, d1, d2);
      Json j;
      j["which"] = which;
      j["k"] = k;
      j["d1"] = to_json(d1);
      j["d2"] = to_json(d2);
      j["degree"] = p.degree();
      j["coefficients"] = to_json(p);
      emit(j);
      return 0;
    };
  });

  // logconst
  std::string lgrid = "64,128,256,512";
  auto* logc = app.add_subcommand("logconst", "slope of u_{2,1}(0)/B^3 against log B");
  logc->add_option("--grid", lgrid);
  logc->callback([&] {
    action = [&] {
      emit(to_json(fit_log_constant(parse_grid(lgrid), make_box(g, 1))));
      return 0;
    };
  });

  // arcbound
  auto* abound = app.add_subcommand("arcbound", "measure-based bound for the major-arc contribution");
  abound->add_option("--kmn", kmn)->required();
  abound->add_option("--delta", delta)->required();
  abound->add_option("--B", B)->required();
  abound->callback([&] {
    action = [&] {
      const ExponentTriple t = make_triple(kmn);
      Json j = to_json(major_arc_bound(t, delta, make_box(g, B)));
      j["triple"] = to_json(t);
      j["delta"] = delta;
      j["b"] = B;
      emit(j);
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    for (char& c : msg)
      if (c == '\n') c = ' ';
    std::cerr << "usage: " << msg << '\n';
    return 2;
  }

  try {
    require_format(g);
    return action();
  } catch (const ValidationError& e) {
    std::cerr << "validation: " << e.what() << '\n';
    return 2;
  } catch (const OverflowError& e) {
    std::cerr << "overflow: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << '\n';
    return 3;
  } catch (const CacheCorrupt& e) {
    std::cerr << "cache_corrupt: " << e.what() << '\n';
    return 4;
  } catch (const QuadratureError& e) {
    std::cerr << "quadrature: " << e.what() << '\n';
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "internal: " << e.what() << '\n';
    return 1;
  }
}
