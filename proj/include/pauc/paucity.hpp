#pragma once

// Grid scans of exact counts and the paucity / abundance verdicts.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pauc/exponents.hpp"
#include "pauc/growth.hpp"
#include "pauc/tally.hpp"

namespace pauc {

enum class Verdict { Paucity, LogAbundance, PositiveDensityExcess };

std::string_view to_string(Verdict v);

// Verdict thresholds are configuration; reports always carry the raw series.
struct VerdictThresholds {
  double paucity_slope = 5.0;     // slope(residual) and slope(E) must stay below
  double max_log_residual = 0.5;  // fit quality required for a Paucity verdict
  double excess_floor = 0.5;      // min E/B^5 relative to its first value for excess
};

struct PaucityReport {
  ExponentTriple triple;
  TripleClass triple_class = TripleClass::Degenerate;
  std::vector<u64> grid;
  std::vector<CountReport> counts;
  std::optional<GrowthFit> excess_fit;    // log E vs log B
  std::optional<GrowthFit> residual_fit;  // log residual vs log B
  std::vector<double> n_ratio;            // N / B^5
  std::vector<double> e_ratio;            // E / B^5
  bool n_ratio_increasing = false;
  bool excess_floor_held = false;         // e_ratio >= excess_floor * e_ratio[0] throughout
  bool zero_block_dominant = false;       // u0*v0 - T >= residual at the largest B
  Verdict verdict = Verdict::Paucity;
  std::optional<double> fitted_eta;       // 5 - slope(E)
  VerdictThresholds thresholds;
};

// {8, 12, 16, 24, 32, 48, 64}, dropping points whose projected tables
// exceed box.memory_budget.
std::vector<u64> standard_grid(const ExponentTriple& t, const BoxConfig& box);

// Counts at each B (box.B is ignored) and assigns the verdict.
PaucityReport scan_counts(const ExponentTriple& t, std::span<const u64> grid, const BoxConfig& box,
                          const VerdictThresholds& thresholds = {});

Verdict decide_verdict(const PaucityReport& report);

struct LogConstantFit {
  std::vector<u64> grid;
  std::vector<u64> u0;  // u_{2,1}(0) at each B
  double slope = 0;     // estimate of the log-coefficient 18/pi^2
  double intercept = 0;
};

// Regresses u_{2,1}(0) / B^3 on log B.
LogConstantFit fit_log_constant(std::span<const u64> grid, const BoxConfig& box);

inline constexpr double kLogConstant = 18.0 / (3.14159265358979323846 * 3.14159265358979323846);

}  // namespace pauc
