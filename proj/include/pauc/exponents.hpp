#pragma once

// Exponent triples (k, m, n) of the linked system
//
//   sum_{i<=5} (x_i^k - y_i^k) = sum_{i<=3} (x_i^n - y_i^n) = sum_{i=4,5} (x_i^m - y_i^m) = 0
//
// and their classification into the excluded, degenerate and paucity cases.

#include <cstdint>
#include <string>
#include <string_view>

#include "pauc/types.hpp"

namespace pauc {

inline constexpr int kMaxExponent = 12;

struct ExponentTriple {
  int k = 1;  // shared degree linking both blocks
  int m = 1;  // trailing (two-variable) block constraint
  int n = 1;  // leading (three-variable) block constraint

  // Throws ValidationError unless all exponents lie in [1, kMaxExponent].
  static ExponentTriple make(int k, int m, int n);

  bool degenerate() const { return k == m || k == n; }
  friend bool operator==(const ExponentTriple&, const ExponentTriple&) = default;
};

enum class TripleClass {
  Degenerate,
  ExcludedLog21,
  ExcludedLog12,
  Excluded311,
  CaseI,
  CaseII,
  CaseIII,
  CaseIV,
  CaseV,
};

TripleClass classify(const ExponentTriple& t);

std::string_view to_string(TripleClass c);

// True for CaseI..CaseV, the triples with a paucity of non-diagonal solutions.
bool is_paucity_case(TripleClass c);

// Human-readable reason for a degenerate triple ("k=m", "k=n"), empty otherwise.
std::string degeneracy_reason(const ExponentTriple& t);

// Parses "k,m,n".
ExponentTriple parse_triple(std::string_view text);

struct BoxConfig {
  u64 B = 1;
  unsigned parallel_width = 1;
  // Projected working-set cap for table construction, in bytes.
  u64 memory_budget = u64{8} << 30;

  void validate() const;
};

}  // namespace pauc
