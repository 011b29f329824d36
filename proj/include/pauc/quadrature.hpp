#pragma once

// Orthogonality check: N(B) as the integral over [0,1)^3 of
// |f_{k,n}(a,b)^6 f_{k,m}(a,c)^4|, evaluated on equispaced grids finer than
// the trigonometric degree in each variable (exact for trig polynomials).

#include <complex>

#include "pauc/exponents.hpp"

namespace pauc {

struct QuadratureGrid {
  u64 alpha;  // 2 * 5 B^k + 1
  u64 beta;   // 2 * 3 B^n + 1
  u64 gamma;  // 2 * 2 B^m + 1
};

QuadratureGrid quadrature_grid(const ExponentTriple& t, u64 B);

struct QuadratureResult {
  double raw = 0;  // unrounded grid average
  u64 count = 0;   // nearest integer
  QuadratureGrid grid{};
};

inline constexpr double kIntegerTolerance = 1e-3;
inline constexpr u64 kDefaultGridBudget = u64{2} << 30;  // Weyl-term evaluations

// Throws BudgetExceeded when alpha * (beta + gamma) * B exceeds grid_budget
// and QuadratureError when the raw value is not within kIntegerTolerance of
// an integer.
QuadratureResult quadrature_count(const ExponentTriple& t, u64 B, unsigned width = 1,
                                  u64 grid_budget = kDefaultGridBudget);

// Mean of e(t j / G) over j = 0..G-1; the grid-exactness primitive.
std::complex<double> grid_mean_monomial(i64 t, u64 G);

}  // namespace pauc
