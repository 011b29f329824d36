#include <doctest.h>

#include <random>
#include <set>

#include "brute.hpp"
#include "pauc/divisors.hpp"
#include "pauc/errors.hpp"
#include "pauc/pair_solver.hpp"
#include "pauc/psi.hpp"
#include "pauc/tally.hpp"

using namespace pauc;

namespace {

std::set<PairSolution> as_set(const std::vector<PairSolution>& v) { return {v.begin(), v.end()}; }

std::set<PairSolution> expected(const std::map<i128, std::set<PairSolution>>& all, i128 h) {
  const auto it = all.find(h);
  return it == all.end() ? std::set<PairSolution>{} : it->second;
}

BoxConfig box(u64 B) {
  BoxConfig b;
  b.B = B;
  return b;
}

}  // namespace

TEST_CASE("factorize and divisors") {
  CHECK(factorize(1).empty());
  CHECK(factorize(360) == std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(1000000007) == std::vector<PrimePower>{{1000000007, 1}});
  const u128 big = static_cast<u128>(1000003) * 1000033 * 999983;
  CHECK(factorize(big) == std::vector<PrimePower>{{999983, 1}, {1000003, 1}, {1000033, 1}});
  CHECK(multiply(factorize(12), factorize(45)) == factorize(540));
  CHECK(divisors_up_to(factorize(36), 36) == std::vector<u64>{1, 2, 3, 4, 6, 9, 12, 18, 36});
  CHECK(divisors_up_to(factorize(36), 5) == std::vector<u64>{1, 2, 3, 4});
}

TEST_CASE("psi1: examples") {
  CHECK(build_psi1(3, 1, 2).coefficients == std::vector<i128>{9, 6});
  CHECK(build_psi1(3, -1, -1).coefficients == std::vector<i128>{-6, 6});
  for (i128 d1 : {-3, 1, 5})
    for (i128 d2 : {-2, 4}) CHECK(build_psi1(2, d1, d2).coefficients == std::vector<i128>{2});
  CHECK(build_psi1(5, 2, 3).degree() == 3);
  CHECK_THROWS_AS(build_psi1(3, 0, 2), ValidationError);
  CHECK_THROWS_AS(build_psi1(1, 1, 2), ValidationError);
}

TEST_CASE("psi1 identity at k+2 points, 100 random cases") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 8);
    i128 d1 = static_cast<i128>(rng() % 41) - 20, d2 = static_cast<i128>(rng() % 41) - 20;
    if (d1 == 0) d1 = 1;
    if (d2 == 0) d2 = -1;
    const PsiPolynomial p = build_psi1(k, d1, d2);
    CHECK(p.degree() == k - 2);
    for (i128 x = -1; x <= k; ++x) {
      const i128 lhs = brute::pw(x + d1 + d2, k) - brute::pw(x + d1, k) - brute::pw(x + d2, k) + brute::pw(x, k);
      CHECK(lhs == d1 * d2 * p(x));
    }
  }
}

TEST_CASE("psi2 identity and degree") {
  for (int k : {1, 3, 4, 5})
    for (auto [d1, d2] : {std::pair<i128, i128>{1, 2}, {-3, 1}, {2, -5}, {-1, -1}}) {
      const PsiPolynomial p = build_psi2(k, d1, d2);
      if (k > 1) CHECK(p.degree() == 2 * k - 2);
      for (i128 x = -3; x <= 2 * k + 2; ++x) {
        const i128 q = (x + d1) * (x + d1) + (x + d2) * (x + d2) - x * x;
        const i128 r = brute::pw(x + d1, k) + brute::pw(x + d2, k) - brute::pw(x, k);
        CHECK(brute::pw(q, k) - r * r == d1 * d2 * p(x));
      }
    }
}

TEST_CASE("integer roots against a scan") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 3 + static_cast<int>(rng() % 5);
    const i128 d1 = static_cast<i128>(rng() % 9) + 1, d2 = -(static_cast<i128>(rng() % 9) + 1);
    const PsiPolynomial p = build_psi1(k, d1, d2);
    const i128 x0 = static_cast<i128>(rng() % 400) - 200;
    const i128 target = p(x0);
    std::vector<i128> want;
    for (i128 x = -300; x <= 300; ++x)
      if (p(x) == target) want.push_back(x);
    CHECK(integer_roots(p, target, -300, 300) == want);
    CHECK(integer_roots(p, target, 5, 40) == [&] {
      std::vector<i128> w;
      for (i128 x : want)
        if (x >= 5 && x <= 40) w.push_back(x);
      return w;
    }());
  }
}

TEST_CASE("solve_pair_m1: examples") {
  const auto s = solve_pair_m1(3, 30, 4);
  CHECK(as_set(s) == std::set<PairSolution>{{1, 4, 2, 3}, {1, 4, 3, 2}, {4, 1, 2, 3}, {4, 1, 3, 2}});
  CHECK(solve_pair_m1(3, 1, 100).empty());
  const auto all = brute::pair_solutions(4, 1, 50);
  for (i128 h = -13; h <= 13; h += 2) CHECK(as_set(solve_pair_m1(4, h, 50)) == expected(all, h));
  CHECK_THROWS_AS(solve_pair_m1(3, 0, 10), ValidationError);
}

TEST_CASE("solve_pair_21: examples") {
  CHECK(as_set(solve_pair_21(2, 3)) == std::set<PairSolution>{{1, 3, 2, 2}, {3, 1, 2, 2}});
  CHECK(solve_pair_21(1, 100).empty());
  CHECK(solve_pair_21(2, 10).size() == 16);
  const auto all = brute::pair_solutions(2, 1, 30);
  for (i128 h = -120; h <= 120; ++h)
    if (h != 0) CHECK(as_set(solve_pair_21(h, 30)) == expected(all, h));
}

TEST_CASE("solve_pair_m2: sweep against the scan") {
  const auto all = brute::pair_solutions(3, 2, 20);
  for (i128 h = -100; h <= 100; ++h)
    if (h != 0) {
      INFO("h=" << to_string(h));
      CHECK(as_set(solve_pair_m2(3, h, 20)) == expected(all, h));
    }
  const auto lin = brute::pair_solutions(1, 2, 5);
  for (i128 h : {1, -1, 2, 3}) CHECK(as_set(solve_pair_m2(1, h, 5)) == expected(lin, h));
}

TEST_CASE("solve_pair_m2: N = 0 skips only that factorisation") {
  // h = 2 x2^3 makes N vanish at that x2; other x2 must still be searched.
  const auto all = brute::pair_solutions(3, 2, 12);
  for (i128 x2 : {1, 2, 3, 5}) {
    const i128 h = 2 * x2 * x2 * x2;
    CHECK(as_set(solve_pair_m2(3, h, 12)) == expected(all, h));
  }
}

TEST_CASE("solver counts equal v-table entries and solutions satisfy both equations") {
  for (auto [k, m] : {std::pair{3, 1}, {4, 1}, {2, 1}, {3, 2}, {4, 2}, {5, 1}}) {
    const u64 B = 24;
    const FreqTable v = build_v_table(k, m, box(B));
    std::size_t checked = 0;
    for (const auto& e : v.entries()) {
      if (e.key == 0 || checked++ % 7 != 0) continue;
      const auto sols = solve_pair(k, m, e.key, B);
      CHECK(sols.size() == e.count);
      for (const auto& s : sols) CHECK(satisfies(s, k, m, e.key));
    }
    CHECK(solve_pair(k, m, 2 * brute::pw(B, k) + 1, B).empty());
  }
}

TEST_CASE("solve_pair_m2 is identical for every width") {
  for (i128 h : {-98, 7, 19, 218})
    CHECK(solve_pair_m2(3, h, 40, 1) == solve_pair_m2(3, h, 40, 4));
}
