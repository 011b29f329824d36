#include "pauc/weyl.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace pauc {

namespace {

constexpr std::size_t kPairwiseBase = 8;

template <class T>
T pairwise(std::span<const T> v) {
  if (v.size() <= kPairwiseBase) {
    T acc{};
    for (const auto& t : v) acc += t;
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return pairwise(v.first(half)) + pairwise(v.subspan(half));
}

}  // namespace

std::complex<double> pairwise_sum(std::span<const std::complex<double>> terms) { return pairwise(terms); }
double pairwise_sum(std::span<const double> terms) { return pairwise(terms); }

double frac_monomial(double a, u64 x, int k) {
  if (a == 0.0 || x == 0) return 0.0;
  int e = 0;
  const double m = std::frexp(a, &e);
  const auto mant = static_cast<i64>(std::ldexp(m, 53));  // a = mant * 2^(e-53) exactly
  const int shift = 53 - e;
  if (shift <= 0) return 0.0;  // a is an integer
  const bool neg = mant < 0;
  const u64 abs_mant = static_cast<u64>(neg ? -mant : mant);

  double frac;
  if (shift <= 127) {
    // a x^k mod 1 = (mant * x^k mod 2^shift) / 2^shift; unsigned wraparound is
    // arithmetic mod 2^128, which is finer than mod 2^shift.
    u128 p = 1;
    for (int i = 0; i < k; ++i) p *= x;
    const u128 mask = (static_cast<u128>(1) << shift) - 1;
    const u128 r = (static_cast<u128>(abs_mant) * p) & mask;
    frac = std::ldexp(static_cast<double>(r), -shift);
  } else {
    // |a| < 2^-74: fall back to extended floating point.
    const long double v = std::fabs(static_cast<long double>(a)) * std::pow(static_cast<long double>(x), k);
    frac = static_cast<double>(std::fmod(v, 1.0L));
  }
  if (frac >= 1.0) frac = 0.0;
  if (neg && frac != 0.0) frac = 1.0 - frac;
  return frac;
}

std::complex<double> eval_weyl(const WeylSum& ws, double a1, double a2) {
  std::vector<std::complex<double>> terms(ws.B);
  for (u64 x = 1; x <= ws.B; ++x) {
    const double phase = frac_monomial(a1, x, ws.k1) + frac_monomial(a2, x, ws.k2);
    const double angle = 2.0 * std::numbers::pi * phase;
    terms[x - 1] = {std::cos(angle), std::sin(angle)};
  }
  return pairwise_sum(terms);
}

}  // namespace pauc
