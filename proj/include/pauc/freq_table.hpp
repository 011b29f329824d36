#pragma once

#include <span>
#include <vector>

#include "pauc/types.hpp"

namespace pauc {

enum class TableKind : std::uint8_t { LeadingU = 0, TrailingV = 1, MomentM = 2 };

const char* table_kind_tag(TableKind kind);  // "u", "v", "m"

struct TableEntry {
  i128 key;
  u64 count;
  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

// Sparse table h -> count of representations of h as a difference of
// lead-degree power sums over s-tuples subject to equal constraint-degree
// sums. Entries are sorted by key and never store a zero count.
class FreqTable {
 public:
  FreqTable() = default;
  FreqTable(TableKind kind, int lead_exp, int constraint_exp, unsigned arity, u64 B,
            std::vector<TableEntry> entries);

  TableKind kind() const { return kind_; }
  int lead_exp() const { return lead_exp_; }
  int constraint_exp() const { return constraint_exp_; }
  unsigned arity() const { return arity_; }
  u64 box() const { return B_; }

  std::span<const TableEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  u64 total() const { return total_; }

  u64 entry(i128 h) const;
  u64 max_count() const;

  friend bool operator==(const FreqTable&, const FreqTable&) = default;

 private:
  TableKind kind_ = TableKind::MomentM;
  int lead_exp_ = 0;
  int constraint_exp_ = 0;
  unsigned arity_ = 0;
  u64 B_ = 0;
  std::vector<TableEntry> entries_;
  u64 total_ = 0;
};

// sum_h a(h) b(h), iterating the smaller table and probing the larger.
u128 dot(const FreqTable& a, const FreqTable& b);

}  // namespace pauc
