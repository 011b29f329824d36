#pragma once

// Solutions of the trailing pair system for a fixed non-zero h:
//
//   x1^k + x2^k - y1^k - y2^k = h,   x1^m + x2^m = y1^m + y2^m,   1 <= x_i, y_i <= B
//
// found through divisor factorisations instead of a box scan.

#include <compare>
#include <vector>

#include "pauc/types.hpp"

namespace pauc {

struct PairSolution {
  i64 x1, x2, y1, y2;
  friend auto operator<=>(const PairSolution&, const PairSolution&) = default;
};

// Both defining equations, evaluated exactly.
bool satisfies(const PairSolution& s, int k, int m, i128 h);

// m = 1, k > 2: (y1-x1)(y2-x1) psi1 = h.
std::vector<PairSolution> solve_pair_m1(int k, i128 h, u64 B);

// (k, m) = (2, 1): 2 (y1-x1)(y2-x1) = h.
std::vector<PairSolution> solve_pair_21(i128 h, u64 B);

// m = 2, k != 2: (y1-x1)(y2-x1) psi2 = h (2 x2^k - h), one x2 at a time.
std::vector<PairSolution> solve_pair_m2(int k, i128 h, u64 B, unsigned width = 1);

// Dispatches on m (and k = 2 for m = 1).
std::vector<PairSolution> solve_pair(int k, int m, i128 h, u64 B, unsigned width = 1);

}  // namespace pauc
