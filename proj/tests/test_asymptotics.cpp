#include <doctest.h>

#include <cmath>

#include "pauc/errors.hpp"
#include "pauc/growth.hpp"
#include "pauc/paucity.hpp"

using namespace pauc;

namespace {

BoxConfig box() {
  BoxConfig b;
  b.parallel_width = 1;
  return b;
}

}  // namespace

TEST_CASE("growth fit is exact on power laws") {
  for (double p : {0.5, 3.0, 5.0, 7.25})
    for (double c : {1e-3, 1.0, 42.0}) {
      std::vector<SeriesPoint> s;
      for (u64 B : {8, 12, 16, 24, 32, 48, 64}) s.push_back({B, c * std::pow(double(B), p)});
      const GrowthFit f = fit_growth(s);
      CHECK(std::abs(f.slope - p) < 1e-9);
      CHECK(std::abs(f.intercept - std::log(c)) < 1e-9);
      CHECK(f.max_residual < 1e-9);
    }
}

TEST_CASE("growth fit drops non-positive values and records them") {
  const std::vector<SeriesPoint> s = {{8, 0}, {12, 0}, {16, 4}, {32, 32}};
  const GrowthFit f = fit_growth(s);
  CHECK(f.dropped == std::vector<u64>{8, 12});
  CHECK(f.series.size() == 2);
  CHECK(f.slope == doctest::Approx(3.0));
  CHECK_FALSE(try_fit_growth(std::vector<SeriesPoint>{{8, 0}, {12, 0}, {16, 5}}).has_value());
  CHECK_THROWS_AS(fit_growth(std::vector<SeriesPoint>{{8, 0}, {12, 0}, {16, 5}}), ValidationError);
  CHECK_THROWS_AS(fit_growth(std::vector<SeriesPoint>{{8, 1}, {8, 2}, {16, 5}}), ValidationError);
}

TEST_CASE("least squares needs distinct x") {
  const std::vector<double> x = {2, 2, 2}, y = {1, 2, 3};
  CHECK_THROWS_AS(least_squares(x, y), ValidationError);
}

TEST_CASE("scan: grid validation") {
  CHECK_THROWS_AS(scan_counts({4, 3, 1}, std::vector<u64>{8, 12}, box()), ValidationError);
  CHECK_THROWS_AS(scan_counts({4, 3, 1}, std::vector<u64>{8, 12, 12}, box()), ValidationError);
  CHECK_THROWS_AS(scan_counts({3, 3, 1}, std::vector<u64>{8, 12, 16}, box()), ValidationError);
  CHECK(standard_grid({4, 3, 1}, box()) == std::vector<u64>{8, 12, 16, 24, 32, 48, 64});
  BoxConfig small = box();
  small.memory_budget = u64{1} << 20;
  CHECK(standard_grid({4, 3, 1}, small).size() < 7);
}

TEST_CASE("scan: (4,3,1) shows paucity") {
  const PaucityReport r = scan_counts({4, 3, 1}, std::vector<u64>{8, 12, 16, 24, 32}, box());
  CHECK(r.verdict == Verdict::Paucity);
  REQUIRE(r.excess_fit.has_value());
  CHECK(r.excess_fit->slope < 5);
  CHECK(r.excess_fit->dropped == std::vector<u64>{8, 12});
  REQUIRE(r.residual_fit.has_value());
  CHECK(r.residual_fit->slope < 5);
  REQUIRE(r.fitted_eta.has_value());
  CHECK(*r.fitted_eta == doctest::Approx(5 - r.excess_fit->slope));
  for (const auto& c : r.counts) CHECK(c.N == c.u0 * c.v0 + c.residual);
}

TEST_CASE("scan: (2,3,1) shows logarithmic abundance") {
  const PaucityReport r = scan_counts({2, 3, 1}, std::vector<u64>{16, 24, 32, 48, 64}, box());
  CHECK(r.verdict == Verdict::LogAbundance);
  CHECK(r.n_ratio_increasing);
  for (std::size_t i = 1; i < r.n_ratio.size(); ++i) CHECK(r.n_ratio[i] > r.n_ratio[i - 1]);
  CHECK(r.counts.back().N == 19725326080ull);
}

TEST_CASE("scan: (3,1,1) shows a positive-density excess") {
  const PaucityReport r = scan_counts({3, 1, 1}, std::vector<u64>{8, 12, 16, 24}, box());
  CHECK(r.verdict == Verdict::PositiveDensityExcess);
  CHECK(r.excess_floor_held);
  for (double e : r.e_ratio) CHECK(e >= 0.5 * r.e_ratio.front());
  CHECK(r.counts.front().E == 72408);
}

TEST_CASE("scan: thresholds are configuration") {
  VerdictThresholds strict;
  strict.paucity_slope = 3.0;
  const PaucityReport r = scan_counts({4, 3, 1}, std::vector<u64>{8, 12, 16, 24, 32}, box(), strict);
  CHECK(r.verdict != Verdict::Paucity);
  CHECK(r.thresholds.paucity_slope == 3.0);
}

TEST_CASE("scan: (3,1,1) excess outgrows (3,2,1) on the standard grid" * doctest::should_fail()) {
  // Over the full standard grid the order is reversed at these box sizes;
  // the separation is asymptotic. Kept as an expected failure so a change
  // in behaviour is noticed.
  const std::vector<u64> grid = {8, 12, 16, 24, 32, 48, 64};
  const PaucityReport a = scan_counts({3, 1, 1}, grid, box());
  const PaucityReport b = scan_counts({3, 2, 1}, grid, box());
  CHECK(a.excess_fit->slope > b.excess_fit->slope);
}

TEST_CASE("log constant") {
  CHECK(kLogConstant == doctest::Approx(1.82378).epsilon(1e-5));
  const LogConstantFit f = fit_log_constant(std::vector<u64>{16, 32, 64, 128}, box());
  CHECK(f.u0 == std::vector<u64>{27304, 260240, 2413144, 21966032});
  CHECK(std::abs(f.slope - kLogConstant) < 0.5 * kLogConstant);
  CHECK_THROWS_AS(fit_log_constant(std::vector<u64>{64, 64, 64}, box()), ValidationError);
  CHECK_THROWS_AS(fit_log_constant(std::vector<u64>{64, 64, 64, 64}, box()), ValidationError);
}
