#pragma once

// Brute-force reference counts. These enumerate the defining boxes directly
// and share no code with the class/correlation machinery in tally.

#include "pauc/exponents.hpp"

namespace pauc::oracle {

// Ten-variable count by joining the filtered six-tuples and four-tuples on
// their degree-k difference. Requires B^6 <= 10^8.
u64 join_count(const ExponentTriple& t, u64 B);

}  // namespace pauc::oracle
