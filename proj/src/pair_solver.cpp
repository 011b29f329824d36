#include "pauc/pair_solver.hpp"

#include <algorithm>
#include <array>

#include "pauc/divisors.hpp"
#include "pauc/errors.hpp"
#include "pauc/int_math.hpp"
#include "pauc/parallel.hpp"
#include "pauc/psi.hpp"

namespace pauc {

namespace {

void require_nonzero(i128 h) {
  if (h == 0) throw ValidationError("h must be non-zero (h = 0 is the diagonal case, see build_v_table)");
}

void require_box(u64 B) {
  if (B < 1) throw ValidationError("box bound B must be >= 1");
}

i128 abs128(i128 v) { return v < 0 ? -v : v; }

void sort_unique(std::vector<PairSolution>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// x1 range keeping x1, x1+d1, x1+d2 and x1+d1+d2 inside [1, B].
std::pair<i128, i128> x1_window(i128 d1, i128 d2, u64 B) {
  const i128 b = static_cast<i128>(B);
  i128 lo = 1, hi = b;
  for (i128 shift : {d1, d2, d1 + d2}) {
    lo = std::max(lo, 1 - shift);
    hi = std::min(hi, b - shift);
  }
  return {lo, hi};
}

// Signed pairs (d1, d2) with |d_i| <= B-1 and d1 d2 dividing n (> 0).
template <class Fn>
void for_each_divisor_pair(const std::vector<PrimePower>& factors, u128 n, u64 B, Fn&& fn) {
  if (B < 2) return;
  const auto divs = divisors_up_to(factors, B - 1);
  for (u64 a : divs) {
    const u128 rest = n / a;
    for (u64 b : divs) {
      if (rest % b != 0) continue;
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) fn(static_cast<i128>(a) * s1, static_cast<i128>(b) * s2);
    }
  }
}

PairSolution make_solution(i128 x1, i128 x2, i128 y1, i128 y2) {
  return PairSolution{static_cast<i64>(x1), static_cast<i64>(x2), static_cast<i64>(y1), static_cast<i64>(y2)};
}

}  // namespace

bool satisfies(const PairSolution& s, int k, int m, i128 h) {
  const unsigned uk = static_cast<unsigned>(k);
  const unsigned um = static_cast<unsigned>(m);
  const i128 lead = ipow(s.x1, uk) + ipow(s.x2, uk) - ipow(s.y1, uk) - ipow(s.y2, uk);
  const i128 con = ipow(s.x1, um) + ipow(s.x2, um) - ipow(s.y1, um) - ipow(s.y2, um);
  return lead == h && con == 0;
}

std::vector<PairSolution> solve_pair_m1(int k, i128 h, u64 B) {
  require_nonzero(h);
  require_box(B);
  if (k <= 2) throw ValidationError("solve_pair_m1 requires k > 2");
  require_power_ceiling(B, static_cast<unsigned>(k), 2);

  std::vector<PairSolution> out;
  const u128 n = static_cast<u128>(abs128(h));
  const auto factors = factorize(n);
  for_each_divisor_pair(factors, n, B, [&](i128 d1, i128 d2) {
    const i128 d3 = h / (d1 * d2);
    const auto [lo, hi] = x1_window(d1, d2, B);
    if (hi < lo) return;
    const auto psi = build_psi1(k, d1, d2);
    for (i128 x1 : integer_roots(psi, d3, lo, hi)) {
      const auto s = make_solution(x1, x1 + d1 + d2, x1 + d1, x1 + d2);
      if (!satisfies(s, k, 1, h)) throw std::logic_error("solve_pair_m1 produced a non-solution");
      out.push_back(s);
    }
  });
  sort_unique(out);
  return out;
}

std::vector<PairSolution> solve_pair_21(i128 h, u64 B) {
  require_nonzero(h);
  require_box(B);
  std::vector<PairSolution> out;
  if (h % 2 != 0) return out;
  const i128 g = h / 2;
  const u128 n = static_cast<u128>(abs128(g));
  const auto factors = factorize(n);
  for_each_divisor_pair(factors, n, B, [&](i128 d1, i128 d2) {
    if (d1 * d2 != g) return;
    const auto [lo, hi] = x1_window(d1, d2, B);
    for (i128 x1 = lo; x1 <= hi; ++x1) out.push_back(make_solution(x1, x1 + d1 + d2, x1 + d1, x1 + d2));
  });
  sort_unique(out);
  return out;
}

std::vector<PairSolution> solve_pair_m2(int k, i128 h, u64 B, unsigned width) {
  require_nonzero(h);
  require_box(B);
  if (k == 2) throw ValidationError("solve_pair_m2 requires k != 2");
  require_power_ceiling(B, static_cast<unsigned>(k), 4);

  const u128 abs_h = static_cast<u128>(abs128(h));
  const auto h_factors = factorize(abs_h);
  const i128 b = static_cast<i128>(B);

  // Solutions with the pinned variable p in the x2 role and 2 p^k != h; the
  // mirrored run reuses them with x1 and x2 exchanged.
  const unsigned workers = effective_workers(B, width);
  std::vector<std::vector<PairSolution>> partial(workers);
  parallel_chunks(B, width, [&](unsigned w, std::size_t begin, std::size_t end) {
    auto& found = partial[w];
    for (std::size_t idx = begin; idx < end; ++idx) {
      const i128 pinned = static_cast<i128>(idx) + 1;
      const i128 cofactor = checked_add(checked_mul(2, ipow(pinned, static_cast<unsigned>(k))), -h);
      if (cofactor == 0) continue;  // N = 0: this pinning is left to the mirrored run
      const i128 N = checked_mul(h, cofactor);
      const u128 abs_n = static_cast<u128>(abs128(N));
      const auto factors = multiply(h_factors, factorize(static_cast<u128>(abs128(cofactor))));
      for_each_divisor_pair(factors, abs_n, B, [&](i128 d1, i128 d2) {
        const i128 d3 = N / (d1 * d2);
        const i128 rhs = pinned * pinned + 2 * d1 * d2;
        i128 r;
        if (!exact_sqrt(rhs, r)) return;
        const std::array<i128, 2> branches{r - d1 - d2, -r - d1 - d2};
        for (std::size_t bi = 0; bi < (r == 0 ? 1u : 2u); ++bi) {
          const i128 other = branches[bi];
          const i128 y1 = other + d1, y2 = other + d2;
          if (other < 1 || other > b || y1 < 1 || y1 > b || y2 < 1 || y2 > b) continue;
          const auto s = make_solution(other, pinned, y1, y2);
          if (!satisfies(s, k, 2, h)) continue;  // extraneous square-root branch
          if (build_psi2(k, d1, d2)(other) != d3) throw std::logic_error("psi2 identity violated");
          found.push_back(s);
          found.push_back(make_solution(pinned, other, y1, y2));
        }
      });
    }
  });
  std::vector<PairSolution> out;
  for (auto& p : partial) out.insert(out.end(), p.begin(), p.end());
  sort_unique(out);
  return out;
}

std::vector<PairSolution> solve_pair(int k, int m, i128 h, u64 B, unsigned width) {
  if (m == 1 && k == 2) return solve_pair_21(h, B);
  if (m == 1 && k > 2) return solve_pair_m1(k, h, B);
  if (m == 2 && k != 2) return solve_pair_m2(k, h, B, width);
  throw ValidationError("no divisor solver for (k,m)=(" + std::to_string(k) + "," + std::to_string(m) + ")");
}

}  // namespace pauc
