#pragma once

// Binary cache format for FreqTable:
//
//   offset  size  field
//   0       5     magic "PAUC1"
//   5       1     kind (0 = u, 1 = v, 2 = m)
//   6       1     arity
//   7       1     lead exponent
//   8       1     constraint exponent
//   9       8     B (little-endian u64)
//   17      8     entry count (little-endian u64)
//   25      24*n  entries sorted by key: key as little-endian two's-complement
//                 128-bit integer, then count as little-endian u64

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "pauc/freq_table.hpp"

namespace pauc {

inline constexpr char kCacheMagic[] = "PAUC1";

void write_table(std::ostream& out, const FreqTable& table);

// Throws CacheVersionMismatch for a "PAUC" file of another version and
// CacheCorrupt for anything else malformed.
FreqTable read_table(std::istream& in);

void save_table(const std::filesystem::path& path, const FreqTable& table);
FreqTable load_table(const std::filesystem::path& path);

// "{kind}_{k}_{mn}_{B}.pauc"
std::string cache_file_name(TableKind kind, int lead_exp, int constraint_exp, u64 B);

// PAUC_CACHE_DIR if set, else ./.pauc-cache
std::filesystem::path default_cache_dir();

}  // namespace pauc
