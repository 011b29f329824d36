#pragma once

// Auxiliary polynomials of the divisor parametrisation of the trailing pair
// system. With y1 = x + d1 and y2 = x + d2:
//
//   psi1: (x+d1+d2)^k - (x+d1)^k - (x+d2)^k + x^k               = d1 d2 psi1(x)
//   psi2: ((x+d1)^2 + (x+d2)^2 - x^2)^k - ((x+d1)^k + (x+d2)^k - x^k)^2
//                                                                 = d1 d2 psi2(x)

#include <vector>

#include "pauc/types.hpp"

namespace pauc {

struct PsiPolynomial {
  std::vector<i128> coefficients;  // ascending powers of x, no trailing zeros

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  // Checked evaluation; throws OverflowError.
  i128 operator()(i128 x) const;
};

PsiPolynomial build_psi1(int k, i128 d1, i128 d2);
PsiPolynomial build_psi2(int k, i128 d1, i128 d2);

// Integer x in [lo, hi] with p(x) = target, ascending.
std::vector<i128> integer_roots(const PsiPolynomial& p, i128 target, i128 lo, i128 hi);

}  // namespace pauc
