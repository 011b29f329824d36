#include "pauc/paucity.hpp"

#include <algorithm>
#include <cmath>

#include "pauc/errors.hpp"
#include "pauc/power_classes.hpp"

namespace pauc {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Paucity: return "Paucity";
    case Verdict::LogAbundance: return "LogAbundance";
    case Verdict::PositiveDensityExcess: return "PositiveDensityExcess";
  }
  return "?";
}

std::vector<u64> standard_grid(const ExponentTriple& t, const BoxConfig& box) {
  std::vector<u64> grid;
  for (u64 B : {8, 12, 16, 24, 32, 48, 64}) {
    // The joint histograms of both blocks dominate the working set.
    const long double bytes = 48.0L * (multiset_count(3, B) + multiset_count(2, B)) +
                              64.0L * multiset_count(2, B) * static_cast<long double>(B);
    if (bytes <= static_cast<long double>(box.memory_budget)) grid.push_back(B);
  }
  (void)t;
  return grid;
}

Verdict decide_verdict(const PaucityReport& r) {
  const auto& th = r.thresholds;
  const bool residual_small = !r.residual_fit || (r.residual_fit->slope < th.paucity_slope &&
                                                  r.residual_fit->max_residual < th.max_log_residual);
  const bool excess_small = !r.excess_fit || r.excess_fit->slope < th.paucity_slope;
  if (residual_small && excess_small && !r.excess_floor_held) return Verdict::Paucity;
  // Growth carried by u(0) is the logarithmic kind; growth carried by h != 0 is not.
  if (r.n_ratio_increasing && r.zero_block_dominant) return Verdict::LogAbundance;
  if (r.excess_floor_held) return Verdict::PositiveDensityExcess;
  if (r.n_ratio_increasing) return Verdict::LogAbundance;
  return Verdict::PositiveDensityExcess;
}

PaucityReport scan_counts(const ExponentTriple& t, std::span<const u64> grid, const BoxConfig& box,
                          const VerdictThresholds& thresholds) {
  if (grid.size() < 3) throw ValidationError("scan grid needs at least 3 points");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (grid[i] <= grid[i - 1]) throw ValidationError("scan grid must be strictly increasing");
  if (t.degenerate()) throw ValidationError("degenerate triple: " + degeneracy_reason(t));

  PaucityReport r;
  r.triple = t;
  r.triple_class = classify(t);
  r.grid.assign(grid.begin(), grid.end());
  r.thresholds = thresholds;
  std::vector<SeriesPoint> excess, residual;
  for (u64 B : grid) {
    BoxConfig at = box;
    at.B = B;
    r.counts.push_back(count_N(t, at));
    const auto& c = r.counts.back();
    const double b5 = std::pow(static_cast<double>(B), 5);
    r.n_ratio.push_back(static_cast<double>(c.N) / b5);
    r.e_ratio.push_back(static_cast<double>(c.E) / b5);
    excess.push_back({B, static_cast<double>(c.E)});
    residual.push_back({B, static_cast<double>(c.residual)});
  }
  r.excess_fit = try_fit_growth(excess);
  r.residual_fit = try_fit_growth(residual);
  r.n_ratio_increasing = true;
  for (std::size_t i = 1; i < r.n_ratio.size(); ++i)
    if (!(r.n_ratio[i] > r.n_ratio[i - 1])) r.n_ratio_increasing = false;
  r.excess_floor_held = r.e_ratio.front() > 0;
  for (double e : r.e_ratio)
    if (e < thresholds.excess_floor * r.e_ratio.front()) r.excess_floor_held = false;
  const auto& last = r.counts.back();
  r.zero_block_dominant = last.E - last.residual >= last.residual;
  if (r.excess_fit) r.fitted_eta = 5.0 - r.excess_fit->slope;
  r.verdict = decide_verdict(r);
  return r;
}

LogConstantFit fit_log_constant(std::span<const u64> grid, const BoxConfig& box) {
  if (grid.size() < 4) throw ValidationError("log-constant fit needs at least 4 grid values");
  LogConstantFit f;
  std::vector<double> xs, ys;
  for (u64 B : grid) {
    BoxConfig at = box;
    at.B = B;
    const u64 u0 = u_zero(2, 1, at);
    f.grid.push_back(B);
    f.u0.push_back(u0);
    xs.push_back(std::log(static_cast<double>(B)));
    ys.push_back(static_cast<double>(u0) / std::pow(static_cast<double>(B), 3));
  }
  const LineFit line = least_squares(xs, ys);
  f.slope = line.slope;
  f.intercept = line.intercept;
  return f;
}

}  // namespace pauc
