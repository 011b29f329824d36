#include "pauc/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pauc/errors.hpp"

namespace pauc {

LineFit least_squares(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw ValidationError("regression needs two or more points");
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (!(sxx > 0)) throw ValidationError("regression undefined: all x values equal");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  return f;
}

std::optional<GrowthFit> try_fit_growth(std::span<const SeriesPoint> series) {
  for (std::size_t i = 1; i < series.size(); ++i)
    if (series[i].B <= series[i - 1].B) throw ValidationError("growth series must be strictly increasing in B");
  GrowthFit fit;
  std::vector<double> xs, ys;
  for (const auto& p : series) {
    if (p.B < 1) throw ValidationError("growth series needs B >= 1");
    if (!(p.value > 0)) {
      fit.dropped.push_back(p.B);
      continue;
    }
    fit.series.push_back(p);
    xs.push_back(std::log(static_cast<double>(p.B)));
    ys.push_back(std::log(p.value));
  }
  if (fit.series.size() < 2) return std::nullopt;
  const LineFit line = least_squares(xs, ys);
  fit.slope = line.slope;
  fit.intercept = line.intercept;
  for (std::size_t i = 0; i < xs.size(); ++i)
    fit.max_residual = std::max(fit.max_residual, std::fabs(ys[i] - (line.slope * xs[i] + line.intercept)));
  return fit;
}

GrowthFit fit_growth(std::span<const SeriesPoint> series) {
  auto fit = try_fit_growth(series);
  if (!fit) throw ValidationError("growth fit needs two or more positive values");
  return *fit;
}

}  // namespace pauc
