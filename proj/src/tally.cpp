#include "pauc/tally.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pauc/errors.hpp"
#include "pauc/flat_counter.hpp"
#include "pauc/int_math.hpp"
#include "pauc/parallel.hpp"
#include "pauc/power_classes.hpp"

namespace pauc {

namespace {

constexpr std::size_t kRowChunk = 1024;
constexpr u64 kBytesPerHashedEntry = 64;

// A contiguous block of rows of one class; pairs (i, j) with i in the block
// and j >= i are this item's responsibility.
struct WorkItem {
  std::size_t cls;
  std::size_t row_begin;
  std::size_t row_end;
};

std::vector<WorkItem> plan_work(const std::vector<PowerClass>& classes) {
  std::vector<WorkItem> items;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const std::size_t d = classes[c].values.size();
    if (d < kLargeClassThreshold) {
      items.push_back({c, 0, d});
      continue;
    }
    for (std::size_t r = 0; r < d; r += kRowChunk) items.push_back({c, r, std::min(d, r + kRowChunk)});
  }
  return items;
}

void require_distinct(int k, int other, const char* name) {
  if (k == other)
    throw ValidationError(std::string("degenerate exponents: k=") + name + " (" + std::to_string(k) + ")");
}

void require_exponent(int e) {
  if (e < 1 || e > kMaxExponent) throw ValidationError("exponent out of range: " + std::to_string(e));
}

// Restriction of the u table to the key set of v: acc[i] = u(v.entries()[i].key).
std::vector<u64> restricted_u(int k, int n, const BoxConfig& box, const FreqTable& v) {
  const auto classes = build_power_classes(ClassSpec{3, k, n, box.B}, box.parallel_width, box.memory_budget);
  const auto entries = v.entries();
  const KeyIndex index(entries.begin(), entries.end(), [](const TableEntry& e) { return e.key; });
  const long long zero_idx = index.find(0);
  const auto items = plan_work(classes);
  const unsigned workers = effective_workers(items.size(), box.parallel_width);

  const long double projected = static_cast<long double>(entries.size()) * sizeof(u64) * workers;
  if (projected > static_cast<long double>(box.memory_budget))
    throw BudgetExceeded("memory budget: restricted u accumulators need ~" +
                         std::to_string(static_cast<u64>(projected)) + " bytes");

  std::vector<std::vector<u64>> partial(workers, std::vector<u64>(entries.size(), 0));
  parallel_chunks(items.size(), box.parallel_width, [&](unsigned w, std::size_t begin, std::size_t end) {
    auto& acc = partial[w];
    for (std::size_t it = begin; it < end; ++it) {
      const auto& vals = classes[items[it].cls].values;
      for (std::size_t i = items[it].row_begin; i < items[it].row_end; ++i) {
        const u64 ci = vals[i].mult;
        if (zero_idx >= 0) acc[static_cast<std::size_t>(zero_idx)] += ci * ci;
        for (std::size_t j = i + 1; j < vals.size(); ++j) {
          const i128 diff = vals[j].value - vals[i].value;
          const long long pos = index.find(diff);
          if (pos < 0) continue;  // v is symmetric: -diff is absent too
          const u64 w2 = ci * vals[j].mult;
          acc[static_cast<std::size_t>(pos)] += w2;
          const long long neg = index.find(-diff);
          if (neg >= 0) acc[static_cast<std::size_t>(neg)] += w2;
        }
      }
    }
  });
  std::vector<u64> out(entries.size(), 0);
  for (const auto& acc : partial)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(out[i], acc[i]);
  return out;
}

}  // namespace

FreqTable build_difference_table(TableKind kind, unsigned arity, int lead_exp, int constraint_exp,
                                 const BoxConfig& box) {
  box.validate();
  require_exponent(lead_exp);
  require_exponent(constraint_exp);
  require_distinct(lead_exp, constraint_exp, kind == TableKind::TrailingV ? "m" : "n");

  const auto classes =
      build_power_classes(ClassSpec{arity, lead_exp, constraint_exp, box.B}, box.parallel_width, box.memory_budget);

  long double projected_entries = 0;
  for (const auto& c : classes) {
    const long double d = static_cast<long double>(c.values.size());
    projected_entries += d * (d - 1) + 1;
  }
  const long double span = 2.0L * arity * std::pow(static_cast<long double>(box.B), lead_exp) + 1;
  projected_entries = std::min(projected_entries, span);
  const auto items = plan_work(classes);
  const unsigned workers = effective_workers(items.size(), box.parallel_width);
  const long double projected = projected_entries * kBytesPerHashedEntry * (workers + 1);
  if (projected > static_cast<long double>(box.memory_budget))
    throw BudgetExceeded("memory budget: table of up to " + std::to_string(static_cast<u64>(projected_entries)) +
                         " keys needs ~" + std::to_string(static_cast<u64>(projected)) + " bytes, budget is " +
                         std::to_string(box.memory_budget));

  std::vector<FlatCounter> partial(workers);
  parallel_chunks(items.size(), box.parallel_width, [&](unsigned w, std::size_t begin, std::size_t end) {
    auto& table = partial[w];
    for (std::size_t it = begin; it < end; ++it) {
      const auto& vals = classes[items[it].cls].values;
      for (std::size_t i = items[it].row_begin; i < items[it].row_end; ++i) {
        const u64 ci = vals[i].mult;
        table.add(0, ci * ci);
        for (std::size_t j = i + 1; j < vals.size(); ++j) {
          const i128 diff = vals[j].value - vals[i].value;
          const u64 w2 = ci * vals[j].mult;
          table.add(diff, w2);
          table.add(-diff, w2);
        }
      }
    }
  });
  for (std::size_t w = 1; w < partial.size(); ++w) partial[0].merge(partial[w]);

  std::vector<TableEntry> entries;
  if (!partial.empty()) {
    const auto sorted = partial[0].sorted();
    entries.reserve(sorted.size());
    for (const auto& [key, count] : sorted) entries.push_back({key, count});
  }
  return FreqTable(kind, lead_exp, constraint_exp, arity, box.B, std::move(entries));
}

FreqTable build_v_table(int k, int m, const BoxConfig& box) {
  return build_difference_table(TableKind::TrailingV, 2, k, m, box);
}

FreqTable build_u_table(int k, int n, const BoxConfig& box) {
  return build_difference_table(TableKind::LeadingU, 3, k, n, box);
}

CountReport count_N(const ExponentTriple& t, const BoxConfig& box) {
  box.validate();
  if (t.degenerate()) throw ValidationError("degenerate triple: " + degeneracy_reason(t));
  require_power_ceiling(box.B, static_cast<unsigned>(t.k), 5);
  return count_N(t, box, build_v_table(t.k, t.m, box));
}

CountReport count_N(const ExponentTriple& t, const BoxConfig& box, const FreqTable& v) {
  box.validate();
  if (t.degenerate()) throw ValidationError("degenerate triple: " + degeneracy_reason(t));
  require_power_ceiling(box.B, static_cast<unsigned>(t.k), 5);
  if (v.kind() != TableKind::TrailingV || v.lead_exp() != t.k || v.constraint_exp() != t.m || v.box() != box.B)
    throw ValidationError("v table does not match triple and box");

  const auto u = restricted_u(t.k, t.n, box, v);
  const auto entries = v.entries();
  u128 total = 0;
  CountReport r;
  r.triple = t;
  r.B = box.B;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    total += static_cast<u128>(u[i]) * entries[i].count;
    if (entries[i].key == 0) {
      r.u0 = u[i];
      r.v0 = entries[i].count;
    }
  }
  if (total > static_cast<u128>(~u64{0})) throw OverflowError("solution count exceeds 64 bits");
  r.N = static_cast<u64>(total);
  r.residual = r.N - checked_mul(r.u0, r.v0);
  r.T = count_T_exact(box.B);
  if (r.N < r.T) throw std::logic_error("count below diagonal count");
  r.E = r.N - r.T;
  return r;
}

u64 diagonal_triples(u64 B) {
  // C(B,3)*36 + B(B-1)*9 + B ordered pairs over the three multiset shapes.
  const u128 b = B;
  const u128 v = 6 * b * b * b - 9 * b * b + 4 * b;
  if (v > static_cast<u128>(~u64{0})) throw OverflowError("diagonal count exceeds 64 bits");
  return static_cast<u64>(v);
}

u64 diagonal_pairs(u64 B) { return checked_mul(2 * B - 1, B); }

u64 count_T_exact(u64 B) {
  if (B < 1) throw ValidationError("box bound B must be >= 1");
  return checked_mul(diagonal_triples(B), diagonal_pairs(B));
}

u64 count_single(int j, unsigned s, const BoxConfig& box) {
  box.validate();
  require_exponent(j);
  if (s < 1) throw ValidationError("tuple arity s must be >= 1");
  std::vector<u64> partial(effective_workers(~std::size_t{0}, box.parallel_width), 0);
  visit_power_classes(ClassSpec{s, j, j, box.B}, box.parallel_width, box.memory_budget,
                      [&](unsigned w, const PowerClass& c) {
                        const u64 r = c.tuples();
                        partial[w] = checked_add(partial[w], checked_mul(r, r));
                      });
  u64 total = 0;
  for (u64 p : partial) total = checked_add(total, p);
  return total;
}

u64 count_w(int m, u64 B, unsigned width) {
  BoxConfig box;
  box.B = B;
  box.parallel_width = width;
  return count_single(m, 2, box) - diagonal_pairs(B);
}

u64 u_zero(int k, int n, const BoxConfig& box) {
  box.validate();
  require_exponent(k);
  require_exponent(n);
  require_distinct(k, n, "n");
  std::vector<u64> partial(effective_workers(~std::size_t{0}, box.parallel_width), 0);
  visit_power_classes(ClassSpec{3, k, n, box.B}, box.parallel_width, box.memory_budget,
                      [&](unsigned w, const PowerClass& c) {
                        u64 sum = 0;
                        for (const auto& v : c.values) sum += v.mult * v.mult;
                        partial[w] = checked_add(partial[w], sum);
                      });
  u64 total = 0;
  for (u64 p : partial) total = checked_add(total, p);
  return total;
}

u64 count_moment(int k, int j, unsigned s, const BoxConfig& box) {
  box.validate();
  require_exponent(k);
  require_exponent(j);
  require_distinct(k, j, "j");
  if (s < 1) throw ValidationError("tuple arity s must be >= 1");

  // Joint histogram of s-tuples as the convolution of its two halves, one
  // constraint sum at a time; M_s is the sum of squared multiplicities.
  const unsigned s1 = (s + 1) / 2;
  const unsigned s2 = s / 2;
  const auto left = build_power_classes(ClassSpec{s1, k, j, box.B}, box.parallel_width, box.memory_budget);
  std::vector<PowerClass> right;
  if (s2 > 0) {
    right = build_power_classes(ClassSpec{s2, k, j, box.B}, box.parallel_width, box.memory_budget);
  } else {
    PowerClass unit;
    unit.values.push_back({0, 1});
    right.push_back(std::move(unit));
  }

  std::vector<i128> targets;
  targets.reserve(left.size() * right.size());
  for (const auto& a : left)
    for (const auto& b : right) targets.push_back(a.constraint_sum + b.constraint_sum);
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

  const auto by_sum = [](const PowerClass& c, i128 key) { return c.constraint_sum < key; };
  const unsigned workers = effective_workers(targets.size(), box.parallel_width);
  std::vector<u64> partial(workers, 0);
  parallel_chunks(targets.size(), box.parallel_width, [&](unsigned w, std::size_t begin, std::size_t end) {
    std::vector<WeightedValue> merged;
    for (std::size_t t = begin; t < end; ++t) {
      merged.clear();
      for (const auto& a : left) {
        auto it = std::lower_bound(right.begin(), right.end(), targets[t] - a.constraint_sum, by_sum);
        if (it == right.end() || it->constraint_sum != targets[t] - a.constraint_sum) continue;
        for (const auto& x : a.values)
          for (const auto& y : it->values) merged.push_back({x.value + y.value, checked_mul(x.mult, y.mult)});
      }
      std::sort(merged.begin(), merged.end(), [](const auto& p, const auto& q) { return p.value < q.value; });
      for (std::size_t i = 0; i < merged.size();) {
        u64 c = 0;
        std::size_t e = i;
        for (; e < merged.size() && merged[e].value == merged[i].value; ++e) c = checked_add(c, merged[e].mult);
        partial[w] = checked_add(partial[w], checked_mul(c, c));
        i = e;
      }
    }
  });
  u64 total = 0;
  for (u64 p : partial) total = checked_add(total, p);
  return total;
}

}  // namespace pauc
