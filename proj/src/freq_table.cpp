#include "pauc/freq_table.hpp"

#include <algorithm>

#include "pauc/errors.hpp"
#include "pauc/flat_counter.hpp"
#include "pauc/int_math.hpp"

namespace pauc {

void FlatCounter::rehash(std::size_t capacity) {
  std::vector<std::pair<i128, u64>> old = std::move(slots_);
  slots_.assign(capacity, {kEmpty, 0});
  mask_ = capacity - 1;
  size_ = 0;
  for (const auto& s : old)
    if (s.first != kEmpty) add(s.first, s.second);
}

std::vector<std::pair<i128, u64>> FlatCounter::sorted() const {
  std::vector<std::pair<i128, u64>> out;
  out.reserve(size_);
  for (const auto& s : slots_)
    if (s.first != kEmpty) out.push_back(s);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

const char* table_kind_tag(TableKind kind) {
  switch (kind) {
    case TableKind::LeadingU: return "u";
    case TableKind::TrailingV: return "v";
    case TableKind::MomentM: return "m";
  }
  return "?";
}

FreqTable::FreqTable(TableKind kind, int lead_exp, int constraint_exp, unsigned arity, u64 B,
                     std::vector<TableEntry> entries)
    : kind_(kind),
      lead_exp_(lead_exp),
      constraint_exp_(constraint_exp),
      arity_(arity),
      B_(B),
      entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].count == 0) throw ValidationError("frequency table stores a zero count");
    if (i > 0 && !(entries_[i - 1].key < entries_[i].key))
      throw ValidationError("frequency table keys not strictly increasing");
    total_ = checked_add(total_, entries_[i].count);
  }
}

u64 FreqTable::entry(i128 h) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), h,
                             [](const TableEntry& e, i128 key) { return e.key < key; });
  return (it != entries_.end() && it->key == h) ? it->count : 0;
}

u64 FreqTable::max_count() const {
  u64 best = 0;
  for (const auto& e : entries_) best = std::max(best, e.count);
  return best;
}

u128 dot(const FreqTable& a, const FreqTable& b) {
  const FreqTable& small = a.size() <= b.size() ? a : b;
  const FreqTable& large = a.size() <= b.size() ? b : a;
  u128 sum = 0;
  for (const auto& e : small.entries()) {
    const u64 other = large.entry(e.key);
    if (other != 0) sum += static_cast<u128>(e.count) * other;
  }
  return sum;
}

}  // namespace pauc
