#include "pauc/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "pauc/errors.hpp"
#include "pauc/int_math.hpp"
#include "pauc/parallel.hpp"
#include "pauc/weyl.hpp"

namespace pauc {

namespace {

u64 grid_size(u64 B, int e, u64 block) {
  const auto p = checked_pow(static_cast<i128>(B), static_cast<unsigned>(e));
  if (!p || *p > static_cast<i128>(u64{1} << 40)) throw BudgetExceeded("grid budget: B^" + std::to_string(e) + " too large");
  return 2 * block * static_cast<u64>(*p) + 1;
}

std::vector<u64> residues(u64 B, int e, u64 G) {
  std::vector<u64> r(B + 1);
  for (u64 x = 1; x <= B; ++x) {
    u128 v = 1;
    for (int i = 0; i < e; ++i) v = v * x % G;
    r[x] = static_cast<u64>(v);
  }
  return r;
}

std::complex<double> unit(double phase) {
  const double angle = 2.0 * std::numbers::pi * phase;
  return {std::cos(angle), std::sin(angle)};
}

// Mean over the inner grid of |sum_x e(ra_x / Ga + j rb_x / Gb)|^power.
double inner_mean(const std::vector<u64>& outer_res, u64 outer_step, u64 Ga, const std::vector<u64>& inner_res,
                  u64 Gb, u64 B, int power, std::vector<std::complex<double>>& terms, std::vector<double>& values) {
  for (u64 j = 0; j < Gb; ++j) {
    for (u64 x = 1; x <= B; ++x) {
      const u64 ra = static_cast<u64>(static_cast<u128>(outer_step) * outer_res[x] % Ga);
      const u64 rb = static_cast<u64>(static_cast<u128>(j) * inner_res[x] % Gb);
      terms[x - 1] = unit(static_cast<double>(ra) / Ga + static_cast<double>(rb) / Gb);
    }
    const double mod2 = std::norm(pairwise_sum(terms));
    values[j] = std::pow(mod2, power / 2);
  }
  return pairwise_sum(std::span<const double>(values.data(), Gb)) / static_cast<double>(Gb);
}

}  // namespace

QuadratureGrid quadrature_grid(const ExponentTriple& t, u64 B) {
  return QuadratureGrid{grid_size(B, t.k, 5), grid_size(B, t.n, 3), grid_size(B, t.m, 2)};
}

QuadratureResult quadrature_count(const ExponentTriple& t, u64 B, unsigned width, u64 grid_budget) {
  if (B < 1) throw ValidationError("box bound B must be >= 1");
  const QuadratureGrid g = quadrature_grid(t, B);
  const long double work = static_cast<long double>(g.alpha) * (g.beta + g.gamma) * B;
  if (work > static_cast<long double>(grid_budget))
    throw BudgetExceeded("grid budget: " + std::to_string(static_cast<u64>(work)) +
                         " Weyl terms exceed budget " + std::to_string(grid_budget));

  const auto rk = residues(B, t.k, g.alpha);
  const auto rn = residues(B, t.n, g.beta);
  const auto rm = residues(B, t.m, g.gamma);

  // The integrand factorises over beta and gamma for fixed alpha.
  std::vector<double> per_alpha(g.alpha);
  parallel_chunks(g.alpha, width, [&](unsigned, std::size_t begin, std::size_t end) {
    std::vector<std::complex<double>> terms(B);
    std::vector<double> values(std::max(g.beta, g.gamma));
    for (std::size_t i = begin; i < end; ++i) {
      const double six = inner_mean(rk, i, g.alpha, rn, g.beta, B, 6, terms, values);
      const double four = inner_mean(rk, i, g.alpha, rm, g.gamma, B, 4, terms, values);
      per_alpha[i] = six * four;
    }
  });

  QuadratureResult res;
  res.grid = g;
  res.raw = pairwise_sum(per_alpha) / static_cast<double>(g.alpha);
  const double nearest = std::nearbyint(res.raw);
  if (std::fabs(res.raw - nearest) > kIntegerTolerance || nearest < 0)
    throw QuadratureError("quadrature value " + std::to_string(res.raw) + " not within " +
                          std::to_string(kIntegerTolerance) + " of an integer");
  res.count = static_cast<u64>(nearest);
  return res;
}

std::complex<double> grid_mean_monomial(i64 t, u64 G) {
  std::vector<std::complex<double>> terms(G);
  const i64 g = static_cast<i64>(G);
  const i64 step = ((t % g) + g) % g;
  for (u64 j = 0; j < G; ++j) {
    const u64 r = static_cast<u64>(static_cast<u128>(j) * static_cast<u64>(step) % G);
    terms[j] = unit(static_cast<double>(r) / static_cast<double>(G));
  }
  return pairwise_sum(terms) / static_cast<double>(G);
}

}  // namespace pauc
