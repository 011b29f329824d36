#pragma once

#include <optional>
#include <string_view>

#include "pauc/types.hpp"

namespace pauc {

// x^e, or nullopt when the result leaves the signed 128-bit range.
std::optional<i128> checked_pow(i128 x, unsigned e);

// x^e; throws OverflowError on overflow.
i128 ipow(i128 x, unsigned e);

i128 checked_mul(i128 a, i128 b);
i128 checked_add(i128 a, i128 b);
u64 checked_mul(u64 a, u64 b);
u64 checked_add(u64 a, u64 b);

// Throws OverflowError unless multiplier * B^e fits the signed 128-bit range.
void require_power_ceiling(u64 B, unsigned e, unsigned multiplier);

// floor(sqrt(n)) for n >= 0.
i128 isqrt(i128 n);

// Sets root and returns true when n is a perfect square.
bool exact_sqrt(i128 n, i128& root);

u64 gcd(u64 a, u64 b);

// Number of distinct orderings of a sorted tuple (multinomial over run lengths).
u64 permutation_count(const unsigned* sorted_values, unsigned s);

u64 binomial(u64 n, u64 k);

// Decimal with optional sign; throws ValidationError.
i128 parse_i128(std::string_view text);

}  // namespace pauc
