#include "pauc/report_io.hpp"

#include <charconv>
#include <limits>

namespace pauc {

Json to_json(i128 v) {
  if (v >= std::numeric_limits<i64>::min() && v <= std::numeric_limits<i64>::max())
    return static_cast<i64>(v);
  return to_string(v);
}

Json to_json(const ExponentTriple& t) { return Json::array({t.k, t.m, t.n}); }

Json to_json(const CountReport& r) {
  Json j;
  j["triple"] = to_json(r.triple);
  j["b"] = r.B;
  j["n"] = r.N;
  j["t"] = r.T;
  j["e"] = r.E;
  j["residual"] = r.residual;
  j["u0"] = r.u0;
  j["v0"] = r.v0;
  return j;
}

Json to_json(const GrowthFit& f) {
  Json j;
  j["slope"] = f.slope;
  j["intercept"] = f.intercept;
  j["max_residual"] = f.max_residual;
  Json b = Json::array();
  for (const auto& p : f.series) b.push_back(p.B);
  j["fitted_b"] = b;
  j["dropped_b"] = f.dropped;
  return j;
}

Json to_json(const PaucityReport& r) {
  Json j;
  j["triple"] = to_json(r.triple);
  j["class"] = std::string(to_string(r.triple_class));
  j["grid"] = r.grid;
  j["verdict"] = std::string(to_string(r.verdict));
  j["fitted_eta"] = r.fitted_eta ? Json(*r.fitted_eta) : Json(nullptr);
  j["excess_fit"] = r.excess_fit ? to_json(*r.excess_fit) : Json(nullptr);
  j["residual_fit"] = r.residual_fit ? to_json(*r.residual_fit) : Json(nullptr);
  j["n_ratio"] = r.n_ratio;
  j["e_ratio"] = r.e_ratio;
  j["n_ratio_increasing"] = r.n_ratio_increasing;
  j["excess_floor_held"] = r.excess_floor_held;
  j["zero_block_dominant"] = r.zero_block_dominant;
  Json th;
  th["paucity_slope"] = r.thresholds.paucity_slope;
  th["max_log_residual"] = r.thresholds.max_log_residual;
  th["excess_floor"] = r.thresholds.excess_floor;
  j["thresholds"] = th;
  Json counts = Json::array();
  for (const auto& c : r.counts) counts.push_back(to_json(c));
  j["counts"] = counts;
  return j;
}

Json to_json(const ArcDissection& d) {
  Json j;
  j["delta"] = d.delta;
  j["b"] = d.B;
  j["max_q"] = d.max_q;
  j["arc_count"] = d.arcs.size();
  j["measure"] = d.measure;
  Json arcs = Json::array();
  for (const auto& a : d.arcs)
    arcs.push_back({{"q", a.q}, {"a", a.a}, {"center", a.center}, {"halfwidth", a.halfwidth}});
  j["arcs"] = arcs;
  Json u = Json::array();
  for (const auto& iv : d.union_) u.push_back(Json::array({iv.lo, iv.hi}));
  j["union"] = u;
  return j;
}

Json to_json(const WeylScan& s) {
  Json j;
  j["seed"] = s.seed;
  j["samples"] = s.samples;
  j["rejected"] = s.rejected;
  j["sup"] = s.sup;
  j["arg_alpha"] = s.arg_alpha;
  j["arg_beta"] = s.arg_beta;
  return j;
}

Json to_json(const QuadratureResult& q) {
  Json j;
  j["count"] = q.count;
  j["raw"] = q.raw;
  j["grid"] = Json::array({q.grid.alpha, q.grid.beta, q.grid.gamma});
  return j;
}

Json to_json(const PairSolution& s) { return Json::array({s.x1, s.x2, s.y1, s.y2}); }

Json to_json(const PsiPolynomial& p) {
  Json c = Json::array();
  for (i128 v : p.coefficients) c.push_back(to_json(v));
  return c;
}

Json to_json(const MajorArcBound& b) {
  Json j;
  j["first_block"] = b.first_block;
  j["second_block"] = b.second_block;
  j["measure"] = b.measure;
  j["bound"] = b.bound;
  return j;
}

Json to_json(const LogConstantFit& f) {
  Json j;
  j["grid"] = f.grid;
  j["u0"] = f.u0;
  j["slope"] = f.slope;
  j["intercept"] = f.intercept;
  j["target"] = kLogConstant;
  return j;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_counts_csv(std::ostream& out, std::span<const CountReport> rows) {
  out << "B,N,T,E,residual,u0,v0\n";
  for (const auto& r : rows)
    out << r.B << ',' << r.N << ',' << r.T << ',' << r.E << ',' << r.residual << ',' << r.u0 << ','
        << r.v0 << '\n';
}

void write_arcs_csv(std::ostream& out, const ArcDissection& d) {
  out << "q,a,center,halfwidth\n";
  for (const auto& a : d.arcs)
    out << a.q << ',' << a.a << ',' << format_double(a.center) << ',' << format_double(a.halfwidth)
        << '\n';
}

void write_table_csv(std::ostream& out, const FreqTable& t) {
  out << "key,count\n";
  for (const auto& e : t.entries()) out << to_string(e.key) << ',' << e.count << '\n';
}

void write_pairs_csv(std::ostream& out, std::span<const PairSolution> sols) {
  out << "x1,x2,y1,y2\n";
  for (const auto& s : sols) out << s.x1 << ',' << s.x2 << ',' << s.y1 << ',' << s.y2 << '\n';
}

}  // namespace pauc
