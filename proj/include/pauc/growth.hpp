#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pauc/types.hpp"

namespace pauc {

struct SeriesPoint {
  u64 B;
  double value;
};

// Least-squares line through (log B, log value).
struct GrowthFit {
  std::vector<SeriesPoint> series;  // the points actually fitted
  std::vector<u64> dropped;         // B values with value <= 0
  double slope = 0;
  double intercept = 0;
  double max_residual = 0;  // max |log value - fitted|, natural-log units
};

struct LineFit {
  double slope = 0;
  double intercept = 0;
};

// Ordinary least squares; needs two or more distinct x values.
LineFit least_squares(std::span<const double> xs, std::span<const double> ys);

// Throws ValidationError if B is not strictly increasing or fewer than two
// positive values remain.
GrowthFit fit_growth(std::span<const SeriesPoint> series);

// As fit_growth, but nullopt instead of throwing when fewer than two
// positive values remain.
std::optional<GrowthFit> try_fit_growth(std::span<const SeriesPoint> series);

}  // namespace pauc
