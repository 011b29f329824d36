#pragma once

#include <vector>

#include "pauc/types.hpp"

namespace pauc {

struct PrimePower {
  u64 prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Trial division; n >= 1 and n < 2^127.
std::vector<PrimePower> factorize(u128 n);

// Factorisation of the product of two factorised numbers.
std::vector<PrimePower> multiply(const std::vector<PrimePower>& a, const std::vector<PrimePower>& b);

// Sorted positive divisors not exceeding `limit`.
std::vector<u64> divisors_up_to(const std::vector<PrimePower>& factors, u64 limit);

}  // namespace pauc
