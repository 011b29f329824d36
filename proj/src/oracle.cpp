#include "pauc/oracle.hpp"

#include <array>
#include <map>

#include "pauc/errors.hpp"

namespace pauc::oracle {

namespace {

i128 power(i128 x, int e) {
  i128 r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

// h -> number of (x, y) in [1,B]^s x [1,B]^s with sum(x^c - y^c) = 0 and
// sum(x^k - y^k) = h, by running an odometer over all 2s coordinates.
std::map<i128, u64> block_histogram(unsigned s, int k, int c, u64 B) {
  std::map<i128, u64> hist;
  std::array<u64, 6> v{};
  const unsigned dims = 2 * s;
  for (unsigned i = 0; i < dims; ++i) v[i] = 1;
  while (true) {
    i128 lead = 0;
    i128 con = 0;
    for (unsigned i = 0; i < s; ++i) {
      lead += power(static_cast<i128>(v[i]), k) - power(static_cast<i128>(v[s + i]), k);
      con += power(static_cast<i128>(v[i]), c) - power(static_cast<i128>(v[s + i]), c);
    }
    if (con == 0) ++hist[lead];
    unsigned d = 0;
    while (d < dims && v[d] == B) v[d++] = 1;
    if (d == dims) break;
    ++v[d];
  }
  return hist;
}

}  // namespace

u64 join_count(const ExponentTriple& t, u64 B) {
  if (B < 1) throw ValidationError("box bound B must be >= 1");
  u128 six = 1;
  for (int i = 0; i < 6; ++i) six *= B;
  if (six > 100000000) throw BudgetExceeded("oracle: B^6 exceeds 10^8");
  const auto first = block_histogram(3, t.k, t.n, B);
  const auto second = block_histogram(2, t.k, t.m, B);
  u64 total = 0;
  for (const auto& [h, count] : second) {
    auto it = first.find(h);
    if (it != first.end()) total += it->second * count;
  }
  return total;
}

}  // namespace pauc::oracle
