#include "pauc/power_classes.hpp"

#include <algorithm>
#include <array>

#include "pauc/errors.hpp"
#include "pauc/int_math.hpp"
#include "pauc/parallel.hpp"

namespace pauc {

namespace {

constexpr unsigned kMaxArity = 12;

struct PowerTable {
  std::vector<i128> lead;
  std::vector<i128> constraint;
};

PowerTable make_powers(const ClassSpec& spec) {
  if (spec.arity < 1 || spec.arity > kMaxArity) throw ValidationError("tuple arity out of range");
  if (spec.B < 1) throw ValidationError("box bound B must be >= 1");
  require_power_ceiling(spec.B, static_cast<unsigned>(spec.lead_exp), 2 * spec.arity);
  require_power_ceiling(spec.B, static_cast<unsigned>(spec.constraint_exp), 2 * spec.arity);
  PowerTable p;
  p.lead.resize(spec.B + 1);
  p.constraint.resize(spec.B + 1);
  for (u64 x = 0; x <= spec.B; ++x) {
    p.lead[x] = ipow(static_cast<i128>(x), static_cast<unsigned>(spec.lead_exp));
    p.constraint[x] = ipow(static_cast<i128>(x), static_cast<unsigned>(spec.constraint_exp));
  }
  return p;
}

// Sorts and merges equal values in place.
void compress(std::vector<WeightedValue>& values) {
  std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (out > 0 && values[out - 1].value == values[i].value)
      values[out - 1].mult += values[i].mult;
    else
      values[out++] = values[i];
  }
  values.resize(out);
}

// Nondecreasing tuples over [1,B] with component sum `target`.
template <class Fn>
void for_each_tuple_with_sum(unsigned s, u64 B, u64 target, Fn&& fn) {
  std::array<unsigned, kMaxArity> tuple{};
  auto rec = [&](auto&& self, unsigned pos, u64 lo, u64 remaining) -> void {
    const unsigned left = s - pos;
    if (left == 1) {
      if (remaining >= lo && remaining <= B) {
        tuple[pos] = static_cast<unsigned>(remaining);
        fn(tuple.data());
      }
      return;
    }
    u64 hi = std::min<u64>(B, remaining / left);
    u64 floor_needed = remaining > (left - 1) * B ? remaining - (left - 1) * B : 1;
    for (u64 x = std::max(lo, floor_needed); x <= hi; ++x) {
      tuple[pos] = static_cast<unsigned>(x);
      self(self, pos + 1, x, remaining - x);
    }
  };
  rec(rec, 0, 1, target);
}

template <class Fn>
void for_each_tuple(unsigned s, u64 B, Fn&& fn) {
  std::array<unsigned, kMaxArity> tuple{};
  auto rec = [&](auto&& self, unsigned pos, u64 lo) -> void {
    if (pos == s) {
      fn(tuple.data());
      return;
    }
    for (u64 x = lo; x <= B; ++x) {
      tuple[pos] = static_cast<unsigned>(x);
      self(self, pos + 1, x);
    }
  };
  rec(rec, 0, 1);
}

PowerClass linear_class(const ClassSpec& spec, const PowerTable& p, u64 target) {
  PowerClass cls;
  cls.constraint_sum = static_cast<i128>(target);
  for_each_tuple_with_sum(spec.arity, spec.B, target, [&](const unsigned* t) {
    i128 lead = 0;
    for (unsigned i = 0; i < spec.arity; ++i) lead += p.lead[t[i]];
    cls.values.push_back({lead, permutation_count(t, spec.arity)});
  });
  compress(cls.values);
  return cls;
}

struct Record {
  i128 constraint;
  i128 lead;
  u64 mult;
};

}  // namespace

u64 PowerClass::tuples() const {
  u64 n = 0;
  for (const auto& v : values) n = checked_add(n, v.mult);
  return n;
}

u64 multiset_count(unsigned arity, u64 B) { return binomial(B + arity - 1, arity); }

std::vector<PowerClass> build_power_classes(const ClassSpec& spec, unsigned width, u64 memory_budget) {
  const PowerTable p = make_powers(spec);
  const u64 records = multiset_count(spec.arity, spec.B);
  const long double projected = static_cast<long double>(records) * sizeof(Record);
  if (projected > static_cast<long double>(memory_budget))
    throw BudgetExceeded("memory budget: joint histogram of " + std::to_string(records) +
                         " tuples needs ~" + std::to_string(static_cast<u64>(projected)) +
                         " bytes, budget is " + std::to_string(memory_budget));

  if (spec.constraint_exp == 1) {
    const u64 lo = spec.arity;
    const u64 count = spec.arity * spec.B - lo + 1;
    std::vector<PowerClass> classes(count);
    parallel_chunks(count, width, [&](unsigned, std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) classes[i] = linear_class(spec, p, lo + i);
    });
    return classes;
  }

  std::vector<Record> all;
  all.reserve(records);
  for_each_tuple(spec.arity, spec.B, [&](const unsigned* t) {
    Record r{0, 0, permutation_count(t, spec.arity)};
    for (unsigned i = 0; i < spec.arity; ++i) {
      r.constraint += p.constraint[t[i]];
      r.lead += p.lead[t[i]];
    }
    all.push_back(r);
  });
  std::sort(all.begin(), all.end(), [](const Record& a, const Record& b) {
    return a.constraint < b.constraint || (a.constraint == b.constraint && a.lead < b.lead);
  });
  std::vector<PowerClass> classes;
  for (std::size_t i = 0; i < all.size();) {
    PowerClass cls;
    cls.constraint_sum = all[i].constraint;
    std::size_t j = i;
    for (; j < all.size() && all[j].constraint == cls.constraint_sum; ++j) {
      if (!cls.values.empty() && cls.values.back().value == all[j].lead)
        cls.values.back().mult += all[j].mult;
      else
        cls.values.push_back({all[j].lead, all[j].mult});
    }
    classes.push_back(std::move(cls));
    i = j;
  }
  return classes;
}

void visit_power_classes(const ClassSpec& spec, unsigned width, u64 memory_budget,
                         const std::function<void(unsigned, const PowerClass&)>& fn) {
  if (spec.constraint_exp != 1) {
    const auto classes = build_power_classes(spec, width, memory_budget);
    parallel_chunks(classes.size(), width, [&](unsigned w, std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) fn(w, classes[i]);
    });
    return;
  }
  const PowerTable p = make_powers(spec);
  const u64 lo = spec.arity;
  const u64 count = spec.arity * spec.B - lo + 1;
  parallel_chunks(count, width, [&](unsigned w, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) fn(w, linear_class(spec, p, lo + i));
  });
}

}  // namespace pauc
