#pragma once

#include <complex>
#include <span>

#include "pauc/types.hpp"

namespace pauc {

// f(a1, a2) = sum_{1<=x<=B} e(a1 x^k1 + a2 x^k2), e(z) = exp(2 pi i z).
struct WeylSum {
  int k1 = 1;
  int k2 = 1;
  u64 B = 1;
};

// Fractional part of a * x^k, with a * x^k reduced modulo 1 exactly from
// the binary representation of a.
double frac_monomial(double a, u64 x, int k);

std::complex<double> eval_weyl(const WeylSum& ws, double a1, double a2);

// Pairwise (cascade) summation in a fixed order.
std::complex<double> pairwise_sum(std::span<const std::complex<double>> terms);
double pairwise_sum(std::span<const double> terms);

}  // namespace pauc
