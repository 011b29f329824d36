#include "pauc/divisors.hpp"

#include <algorithm>

#include "pauc/errors.hpp"

namespace pauc {

std::vector<PrimePower> factorize(u128 n) {
  if (n == 0) throw ValidationError("cannot factorise zero");
  std::vector<PrimePower> out;
  auto strip = [&](u64 p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  strip(2);
  strip(3);
  // 6j +- 1 wheel
  for (u64 p = 5; static_cast<u128>(p) * p <= n; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) {
    if (n > static_cast<u128>(~u64{0})) throw OverflowError("prime factor exceeds 64 bits");
    out.push_back({static_cast<u64>(n), 1});
  }
  return out;
}

std::vector<PrimePower> multiply(const std::vector<PrimePower>& a, const std::vector<PrimePower>& b) {
  std::vector<PrimePower> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].prime < b[j].prime)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].prime < a[i].prime) {
      out.push_back(b[j++]);
    } else {
      out.push_back({a[i].prime, a[i].exponent + b[j].exponent});
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<u64> divisors_up_to(const std::vector<PrimePower>& factors, u64 limit) {
  std::vector<u64> divs{1};
  if (limit < 1) return {};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    for (std::size_t i = 0; i < base; ++i) {
      u128 d = divs[i];
      for (unsigned r = 0; r < e; ++r) {
        d *= p;
        if (d > limit) break;
        divs.push_back(static_cast<u64>(d));
      }
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace pauc
