#include "pauc/int_math.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pauc/errors.hpp"

namespace pauc {

std::string to_string(i128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(0) - static_cast<u128>(v) : static_cast<u128>(v);
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::optional<i128> checked_pow(i128 x, unsigned e) {
  i128 result = 1;
  for (unsigned i = 0; i < e; ++i)
    if (__builtin_mul_overflow(result, x, &result)) return std::nullopt;
  return result;
}

i128 ipow(i128 x, unsigned e) {
  auto r = checked_pow(x, e);
  if (!r) throw OverflowError("power " + to_string(x) + "^" + std::to_string(e) + " exceeds 128 bits");
  return *r;
}

i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit product overflow");
  return r;
}

i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit sum overflow");
  return r;
}

u64 checked_mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit count overflow");
  return r;
}

u64 checked_add(u64 a, u64 b) {
  u64 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit count overflow");
  return r;
}

void require_power_ceiling(u64 B, unsigned e, unsigned multiplier) {
  auto p = checked_pow(static_cast<i128>(B), e);
  i128 scaled;
  if (!p || __builtin_mul_overflow(*p, static_cast<i128>(multiplier), &scaled))
    throw OverflowError("overflow guard: " + std::to_string(multiplier) + "*B^" + std::to_string(e) +
                        " exceeds the 128-bit ceiling for B=" + std::to_string(B));
}

i128 isqrt(i128 n) {
  if (n < 0) throw ValidationError("isqrt of negative value");
  if (n < 2) return n;
  i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool exact_sqrt(i128 n, i128& root) {
  if (n < 0) return false;
  root = isqrt(n);
  return root * root == n;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 permutation_count(const unsigned* v, unsigned s) {
  static constexpr u64 fact[] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880, 3628800, 39916800, 479001600};
  if (s >= std::size(fact)) throw ValidationError("tuple arity too large");
  u64 denom = 1;
  unsigned run = 1;
  for (unsigned i = 1; i <= s; ++i) {
    if (i < s && v[i] == v[i - 1]) {
      ++run;
    } else {
      denom *= fact[run];
      run = 1;
    }
  }
  return fact[s] / denom;
}

u64 binomial(u64 n, u64 k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 r = 1;
  for (u64 i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<u64>::max()) return std::numeric_limits<u64>::max();
  }
  return static_cast<u64>(r);
}

i128 parse_i128(std::string_view text) {
  std::string_view digits = text;
  const bool neg = !digits.empty() && digits.front() == '-';
  if (neg || (!digits.empty() && digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw ValidationError("not an integer: '" + std::string(text) + "'");
  u128 u = 0;
  const u128 limit = static_cast<u128>(std::numeric_limits<i128>::max()) + (neg ? 1 : 0);
  for (char c : digits) {
    if (c < '0' || c > '9') throw ValidationError("not an integer: '" + std::string(text) + "'");
    if (u > (limit - static_cast<unsigned>(c - '0')) / 10)
      throw ValidationError("integer out of 128-bit range: " + std::string(text));
    u = u * 10 + static_cast<unsigned>(c - '0');
  }
  return neg ? static_cast<i128>(static_cast<u128>(0) - u) : static_cast<i128>(u);
}

}  // namespace pauc
