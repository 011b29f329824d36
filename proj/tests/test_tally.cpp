#include <doctest.h>

#include <map>

#include "brute.hpp"
#include "pauc/errors.hpp"
#include "pauc/oracle.hpp"
#include "pauc/tally.hpp"

using namespace pauc;

namespace {

std::map<i128, u64> as_map(const FreqTable& t) {
  std::map<i128, u64> m;
  for (const auto& e : t.entries()) m[e.key] = e.count;
  return m;
}

BoxConfig box(u64 B, unsigned width = 1) {
  BoxConfig b;
  b.B = B;
  b.parallel_width = width;
  return b;
}

void check_shape(const FreqTable& t, i128 key_limit) {
  u64 total = 0;
  for (const auto& e : t.entries()) {
    CHECK(e.count >= 1);
    CHECK(t.entry(-e.key) == e.count);
    CHECK(e.count <= t.entry(0));
    CHECK(e.key <= key_limit);
    CHECK(e.key >= -key_limit);
    total += e.count;
  }
  CHECK(total == t.total());
  CHECK(t.max_count() == t.entry(0));
}

}  // namespace

TEST_CASE("v table: examples") {
  CHECK(build_v_table(3, 1, box(10)).entry(0) == 190);
  CHECK(build_v_table(3, 1, box(4)).entry(30) == 4);
  const FreqTable one = build_v_table(2, 1, box(1));
  REQUIRE(one.size() == 1);
  CHECK(one.entry(0) == 1);
}

TEST_CASE("u table: examples") {
  CHECK(build_u_table(3, 2, box(2)).entry(0) == 20);
  const FreqTable one = build_u_table(2, 1, box(1));
  REQUIRE(one.size() == 1);
  CHECK(one.entry(0) == 1);
  CHECK(build_u_table(3, 1, box(8)).entry(0) >= 2528);
}

TEST_CASE("v table equals the box scan") {
  for (auto [k, m] : {std::pair{3, 1}, {2, 1}, {4, 2}, {3, 2}, {1, 3}, {5, 1}})
    for (u64 B : {1, 3, 7, 12}) {
      INFO(k << "," << m << " B=" << B);
      const FreqTable t = build_v_table(k, m, box(B));
      CHECK(as_map(t) == brute::v_table(k, m, B));
      check_shape(t, 2 * brute::pw(B, k));
    }
}

TEST_CASE("u table equals the box scan") {
  for (auto [k, n] : {std::pair{3, 1}, {4, 1}, {3, 2}, {2, 1}, {1, 2}, {4, 3}})
    for (u64 B : {1, 2, 4, 6}) {
      INFO(k << "," << n << " B=" << B);
      const FreqTable t = build_u_table(k, n, box(B));
      CHECK(as_map(t) == brute::u_table(k, n, B));
      check_shape(t, 3 * brute::pw(B, k));
    }
}

TEST_CASE("mass conservation against single-constraint counts") {
  for (u64 B : {5, 9, 16}) {
    CHECK(build_v_table(3, 1, box(B)).total() == count_single(1, 2, box(B)));
    CHECK(build_v_table(4, 2, box(B)).total() == count_single(2, 2, box(B)));
    CHECK(build_u_table(3, 1, box(B)).total() == count_single(1, 3, box(B)));
    CHECK(build_u_table(4, 2, box(B)).total() == count_single(2, 3, box(B)));
  }
}

TEST_CASE("tables are identical for every parallel width") {
  for (unsigned w : {2u, 3u, 8u}) {
    CHECK(build_u_table(3, 1, box(20, w)) == build_u_table(3, 1, box(20, 1)));
    CHECK(build_v_table(4, 2, box(30, w)) == build_v_table(4, 2, box(30, 1)));
  }
}

TEST_CASE("large classes take the split path and still match") {
  // n = 1 at B = 40 has classes with more than kLargeClassThreshold lead sums.
  const FreqTable a = build_u_table(4, 1, box(40, 1));
  const FreqTable b = build_u_table(4, 1, box(40, 3));
  CHECK(a == b);
  CHECK(a.total() == count_single(1, 3, box(40)));
  CHECK(a.entry(0) == u_zero(4, 1, box(40)));
}

TEST_CASE("u_zero agrees with the table") {
  for (auto [k, n] : {std::pair{2, 1}, {3, 1}, {3, 2}, {5, 3}})
    for (u64 B : {3, 10, 17}) CHECK(u_zero(k, n, box(B)) == build_u_table(k, n, box(B)).entry(0));
}

TEST_CASE("diagonal counts: closed forms against the multiset scan") {
  CHECK(count_T_exact(1) == 1);
  CHECK(count_T_exact(2) == 120);
  for (u64 B = 1; B <= 12; ++B) {
    CHECK(diagonal_triples(B) == brute::equal_multisets(3, B));
    CHECK(diagonal_pairs(B) == brute::equal_multisets(2, B));
  }
  CHECK(diagonal_triples(30) == 6 * 27000 - 9 * 900 + 4 * 30);
  CHECK(diagonal_pairs(30) == 2 * 900 - 30);
}

TEST_CASE("taxicab counts") {
  CHECK(count_w(3, 11) == 0);
  CHECK(count_w(3, 12) == 8);
  for (int m = 1; m <= 6; ++m) CHECK(count_w(m, 1) == 0);
  for (auto [m, B] : {std::pair{1, 9}, {2, 13}, {3, 15}, {2, 25}}) CHECK(count_w(m, B) == brute::taxicab(m, B));
  CHECK(count_w(2, 10) == 20);
  CHECK(count_w(3, 100) == 360);
  CHECK(count_w(4, 60) == 0);
  // Histogram autocorrelation of m-power pair sums is A2 + w_m.
  for (u64 B : {8, 20}) CHECK(count_single(3, 2, box(B)) == diagonal_pairs(B) + count_w(3, B));
}

TEST_CASE("moment counts") {
  for (int k : {2, 3, 5}) CHECK(count_moment(k, 1, 1, box(7)) == 7);
  CHECK(count_moment(3, 2, 3, box(2)) == 20);
  CHECK(count_moment(3, 2, 2, box(50)) == 4950);
  for (auto [k, j, s, B] : {std::tuple{3, 1, 3, 5}, {3, 2, 3, 6}, {2, 1, 3, 6}, {4, 1, 4, 4}, {3, 1, 4, 5}, {3, 2, 5, 3}}) {
    INFO(k << "," << j << " s=" << s << " B=" << B);
    CHECK(count_moment(k, j, s, box(B)) == brute::moment(k, j, s, B));
  }
  CHECK(count_moment(3, 2, 3, box(10)) == 5140);
  CHECK(count_moment(3, 1, 3, box(10)) == 5176);
  CHECK(count_moment(4, 2, 3, box(8)) == 2528);
  CHECK(count_moment(3, 1, 4, box(6)) == 20226);
  CHECK_THROWS_AS(count_moment(3, 3, 2, box(4)), ValidationError);
}

TEST_CASE("count_N: examples and decomposition") {
  const CountReport one = count_N({5, 3, 2}, box(1));
  CHECK(one.N == 1);
  CHECK(one.T == 1);
  CHECK(one.E == 0);
  const CountReport r = count_N({4, 3, 1}, box(2));
  CHECK(r.N == oracle::join_count({4, 3, 1}, 2));
  CHECK(r.N == r.u0 * r.v0 + r.residual);
  CHECK(count_N({3, 2, 1}, box(6)).N == oracle::join_count({3, 2, 1}, 6));
  CHECK_THROWS_WITH_AS(count_N({3, 3, 1}, box(4)), "degenerate triple: k=m", ValidationError);
}

TEST_CASE("count_N: frozen oracle values") {
  // Ten-variable join oracle, B = 2..6.
  const std::vector<std::pair<ExponentTriple, std::vector<u64>>> frozen = {
      {{4, 3, 1}, {120, 1395, 7168, 24525, 65736}}, {{4, 1, 3}, {120, 1395, 7168, 24525, 65736}},
      {{3, 1, 2}, {120, 1395, 7168, 24561, 65808}}, {{4, 2, 1}, {120, 1395, 7168, 24525, 65736}},
      {{3, 2, 1}, {120, 1395, 7168, 24525, 68112}}, {{2, 3, 1}, {120, 1395, 7168, 25335, 68112}},
      {{3, 1, 1}, {120, 1491, 8080, 28137, 83196}},
  };
  for (const auto& [t, values] : frozen)
    for (u64 B = 2; B <= 6; ++B) {
      const CountReport r = count_N(t, box(B));
      INFO(t.k << t.m << t.n << " B=" << B);
      CHECK(r.N == values[B - 2]);
      CHECK(r.N == r.u0 * r.v0 + r.residual);
      CHECK(r.T == count_T_exact(B));
      CHECK(r.N >= r.T);
      CHECK(r.E == r.N - r.T);
    }
}

TEST_CASE("count_N: larger frozen values and width independence") {
  const CountReport a = count_N({4, 3, 1}, box(16, 1));
  CHECK(a.N == 11079088);
  CHECK(a.residual == 432);
  const CountReport b = count_N({2, 3, 1}, box(32, 1));
  CHECK(b.N == 527848128);
  CHECK(b.u0 == 260240);
  for (unsigned w : {2u, 8u}) {
    const CountReport c = count_N({4, 3, 1}, box(16, w));
    CHECK(c.N == a.N);
    CHECK(c.residual == a.residual);
  }
}

TEST_CASE("memory budget is enforced") {
  BoxConfig b = box(200);
  b.memory_budget = 1024;
  CHECK_THROWS_AS(build_v_table(3, 1, b), BudgetExceeded);
  CHECK_THROWS_AS(count_N({4, 3, 1}, b), BudgetExceeded);
}

TEST_CASE("overflow guard") {
  CHECK_THROWS_AS(build_v_table(12, 1, box(100000)), OverflowError);
}
