#pragma once

// Joint histograms of (constraint-degree sum, lead-degree sum) over ordered
// s-tuples in [1,B]^s, grouped into classes of equal constraint sum.
//
// Tuples are enumerated once per multiset with their ordering multiplicity, so
// a class stores each distinct lead sum once together with the number of
// ordered tuples realising it.

#include <functional>
#include <vector>

#include "pauc/types.hpp"

namespace pauc {

struct WeightedValue {
  i128 value;
  u64 mult;
};

struct PowerClass {
  i128 constraint_sum = 0;
  std::vector<WeightedValue> values;  // sorted by value, distinct

  u64 tuples() const;
};

struct ClassSpec {
  unsigned arity = 2;
  int lead_exp = 1;
  int constraint_exp = 1;
  u64 B = 1;
};

// All classes, ordered by constraint sum. Throws BudgetExceeded when the
// projected histogram exceeds memory_budget bytes.
std::vector<PowerClass> build_power_classes(const ClassSpec& spec, unsigned width, u64 memory_budget);

// Calls fn(worker, cls) once per class. For a linear constraint, classes are
// generated one at a time inside the workers and never all held in memory;
// otherwise this materialises them first. Visiting order across workers is
// unspecified, so fn must only feed order-independent reductions.
void visit_power_classes(const ClassSpec& spec, unsigned width, u64 memory_budget,
                         const std::function<void(unsigned, const PowerClass&)>& fn);

// Number of nondecreasing s-tuples over [1,B].
u64 multiset_count(unsigned arity, u64 B);

}  // namespace pauc
