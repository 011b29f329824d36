#pragma once

// Open-addressed hash table from 128-bit keys to 64-bit counts.

#include <cstddef>
#include <utility>
#include <vector>

#include "pauc/int_math.hpp"
#include "pauc/types.hpp"

namespace pauc {

inline u64 mix_key(i128 key) {
  u64 z = static_cast<u64>(key) ^ (static_cast<u64>(static_cast<u128>(key) >> 64) * 0x9e3779b97f4a7c15ULL);
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class FlatCounter {
 public:
  // Reserved marker; valid keys are bounded far inside the 128-bit range.
  static constexpr i128 kEmpty = static_cast<i128>(static_cast<u128>(1) << 127);

  explicit FlatCounter(std::size_t expected = 16) { rehash(capacity_for(expected)); }

  void add(i128 key, u64 count) {
    if ((size_ + 1) * 10 > slots_.size() * 7) rehash(slots_.size() * 2);
    std::size_t i = mix_key(key) & mask_;
    while (true) {
      auto& s = slots_[i];
      if (s.first == key) {
        s.second = checked_add(s.second, count);
        return;
      }
      if (s.first == kEmpty) {
        s = {key, count};
        ++size_;
        return;
      }
      i = (i + 1) & mask_;
    }
  }

  u64 get(i128 key) const {
    std::size_t i = mix_key(key) & mask_;
    while (true) {
      const auto& s = slots_[i];
      if (s.first == key) return s.second;
      if (s.first == kEmpty) return 0;
      i = (i + 1) & mask_;
    }
  }

  std::size_t size() const { return size_; }

  void merge(const FlatCounter& other) {
    for (const auto& s : other.slots_)
      if (s.first != kEmpty) add(s.first, s.second);
  }

  // Entries sorted by key.
  std::vector<std::pair<i128, u64>> sorted() const;

 private:
  static std::size_t capacity_for(std::size_t expected) {
    std::size_t c = 16;
    while (c * 7 < expected * 10) c *= 2;
    return c;
  }
  void rehash(std::size_t capacity);

  std::vector<std::pair<i128, u64>> slots_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

// Read-only key -> dense index lookup over a fixed key set.
class KeyIndex {
 public:
  KeyIndex() = default;
  template <class It, class KeyOf>
  KeyIndex(It first, It last, KeyOf key_of) {
    std::size_t n = static_cast<std::size_t>(last - first);
    std::size_t c = 16;
    while (c < n * 2) c *= 2;
    slots_.assign(c, {FlatCounter::kEmpty, 0});
    mask_ = c - 1;
    std::size_t idx = 0;
    for (It it = first; it != last; ++it, ++idx) {
      const i128 k = key_of(*it);
      std::size_t i = mix_key(k) & mask_;
      while (slots_[i].first != FlatCounter::kEmpty) i = (i + 1) & mask_;
      slots_[i] = {k, idx};
    }
  }

  // Dense index of key, or -1.
  long long find(i128 key) const {
    std::size_t i = mix_key(key) & mask_;
    while (true) {
      const auto& s = slots_[i];
      if (s.first == key) return static_cast<long long>(s.second);
      if (s.first == FlatCounter::kEmpty) return -1;
      i = (i + 1) & mask_;
    }
  }

 private:
  std::vector<std::pair<i128, std::size_t>> slots_;
  std::size_t mask_ = 0;
};

}  // namespace pauc
