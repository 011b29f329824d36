#include <doctest.h>

#include <limits>

#include "pauc/errors.hpp"
#include "pauc/exponents.hpp"
#include "pauc/int_math.hpp"

using namespace pauc;

TEST_CASE("classify: named triples") {
  CHECK(classify({3, 1, 1}) == TripleClass::Excluded311);
  CHECK(classify({2, 5, 1}) == TripleClass::ExcludedLog21);
  CHECK(classify({1, 3, 2}) == TripleClass::ExcludedLog12);
  CHECK(classify({4, 3, 1}) == TripleClass::CaseI);
  CHECK(classify({4, 1, 3}) == TripleClass::CaseII);
  CHECK(classify({3, 1, 2}) == TripleClass::CaseIII);
  CHECK(classify({4, 2, 1}) == TripleClass::CaseIV);
  CHECK(classify({3, 2, 1}) == TripleClass::CaseV);
  CHECK(classify({3, 3, 1}) == TripleClass::Degenerate);
  CHECK(classify({3, 1, 3}) == TripleClass::Degenerate);
  CHECK(degeneracy_reason({3, 3, 1}) == "k=m");
  CHECK(degeneracy_reason({3, 1, 3}) == "k=n");
  CHECK(degeneracy_reason({4, 3, 1}).empty());
}

TEST_CASE("classify: total, and exactly one case predicate off the exclusions") {
  for (int k = 1; k <= 10; ++k)
    for (int m = 1; m <= 10; ++m)
      for (int n = 1; n <= 10; ++n) {
        const ExponentTriple t{k, m, n};
        const TripleClass c = classify(t);
        if (k == m || k == n) {
          CHECK(c == TripleClass::Degenerate);
          continue;
        }
        if ((k == 2 && n == 1) || (k == 1 && n == 2) || (k == 3 && m == 1 && n == 1)) {
          CHECK_FALSE(is_paucity_case(c));
          continue;
        }
        const bool small_m = m == 1 || m == 2;
        const int hits = (m >= 3) + (small_m && n >= 3) + (small_m && n == 2 && k >= 3) +
                         (small_m && n == 1 && k >= 4) + (k == 3 && m == 2 && n == 1);
        INFO(k << "," << m << "," << n);
        CHECK(hits == 1);
        CHECK(is_paucity_case(c));
      }
}

TEST_CASE("exponent triples: validation and parsing") {
  CHECK(parse_triple("4,3,1") == ExponentTriple{4, 3, 1});
  CHECK_THROWS_AS(parse_triple("4,3"), ValidationError);
  CHECK_THROWS_AS(parse_triple("4,x,1"), ValidationError);
  CHECK_THROWS_AS(ExponentTriple::make(0, 1, 2), ValidationError);
  CHECK_THROWS_AS(ExponentTriple::make(13, 1, 2), ValidationError);
  CHECK(ExponentTriple{5, 3, 5}.degenerate());
  BoxConfig box;
  box.B = 0;
  CHECK_THROWS_AS(box.validate(), ValidationError);
}

TEST_CASE("int_math") {
  CHECK(ipow(3, 4) == 81);
  CHECK_FALSE(checked_pow(10, 39).has_value());
  CHECK_THROWS_AS(ipow(10, 39), OverflowError);
  CHECK(isqrt(99) == 9);
  i128 r = 0;
  CHECK(exact_sqrt(144, r));
  CHECK(r == 12);
  CHECK_FALSE(exact_sqrt(145, r));
  const unsigned t[] = {1, 1, 2};
  CHECK(permutation_count(t, 3) == 3);
  CHECK(binomial(10, 3) == 120);
  CHECK(parse_i128("-170141183460469231731687303715884105728") == std::numeric_limits<i128>::min());
  CHECK_THROWS_AS(parse_i128("170141183460469231731687303715884105728"), ValidationError);
  CHECK(to_string(parse_i128("-123456789012345678901234567890")) == "-123456789012345678901234567890");
  CHECK_THROWS_AS(require_power_ceiling(1000000, 12, 5), OverflowError);
  CHECK_NOTHROW(require_power_ceiling(1000, 12, 5));
}
