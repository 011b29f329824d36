#pragma once

// Exact counting for the linked diagonal system through the block
// decomposition N = sum_h u(h) v(h), where u counts the three-variable block
// and v the two-variable block at shared degree-k difference h.

#include "pauc/exponents.hpp"
#include "pauc/freq_table.hpp"

namespace pauc {

// Classes with at least this many distinct lead sums are split row-wise
// across workers; smaller classes go to a single worker whole.
inline constexpr std::size_t kLargeClassThreshold = std::size_t{1} << 12;

// v_{k,m}(h) over [1,B]^4.
FreqTable build_v_table(int k, int m, const BoxConfig& box);

// u_{k,n}(h) over [1,B]^6.
FreqTable build_u_table(int k, int n, const BoxConfig& box);

// Generic s+s-variable difference table; u is arity 3, v is arity 2.
FreqTable build_difference_table(TableKind kind, unsigned arity, int lead_exp, int constraint_exp,
                                 const BoxConfig& box);

struct CountReport {
  ExponentTriple triple;
  u64 B = 0;
  u64 N = 0;
  u64 T = 0;
  u64 E = 0;
  u64 residual = 0;  // sum over h != 0 of u(h) v(h)
  u64 u0 = 0;
  u64 v0 = 0;
};

CountReport count_N(const ExponentTriple& t, const BoxConfig& box);

// Same, reusing an already built v_{k,m} table for this box.
CountReport count_N(const ExponentTriple& t, const BoxConfig& box, const FreqTable& v);

// Ordered pairs of triples with equal multisets: 6B^3 - 9B^2 + 4B.
u64 diagonal_triples(u64 B);
// Ordered pairs of pairs with equal multisets: 2B^2 - B.
u64 diagonal_pairs(u64 B);
// Exact diagonal count T(B) = diagonal_triples(B) * diagonal_pairs(B).
u64 count_T_exact(u64 B);

// Non-diagonal ordered solutions of x1^m + x2^m = y1^m + y2^m in [1,B]^4.
u64 count_w(int m, u64 B, unsigned width = 1);

// #{x, y in [1,B]^s : sum x^k = sum y^k, sum x^j = sum y^j}.
u64 count_moment(int k, int j, unsigned s, const BoxConfig& box);

// #{x, y in [1,B]^s : sum x^j = sum y^j}.
u64 count_single(int j, unsigned s, const BoxConfig& box);

// u_{k,n}(0) without materialising the table.
u64 u_zero(int k, int n, const BoxConfig& box);

}  // namespace pauc
