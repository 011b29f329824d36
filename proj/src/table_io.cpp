#include "pauc/table_io.hpp"

#include <array>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "pauc/errors.hpp"

namespace pauc {

namespace {

constexpr std::size_t kMagicLen = 5;
constexpr std::size_t kRecordLen = 24;

void put_le(std::ostream& out, u128 v, unsigned bytes) {
  std::array<char, 16> buf{};
  for (unsigned i = 0; i < bytes; ++i) buf[i] = static_cast<char>(static_cast<unsigned char>(v >> (8 * i)));
  out.write(buf.data(), bytes);
}

u128 get_le(std::istream& in, unsigned bytes) {
  std::array<unsigned char, 16> buf{};
  if (!in.read(reinterpret_cast<char*>(buf.data()), bytes)) throw CacheCorrupt("cache file truncated");
  u128 v = 0;
  for (unsigned i = 0; i < bytes; ++i) v |= static_cast<u128>(buf[i]) << (8 * i);
  return v;
}

}  // namespace

void write_table(std::ostream& out, const FreqTable& table) {
  out.write(kCacheMagic, kMagicLen);
  put_le(out, static_cast<u128>(table.kind()), 1);
  put_le(out, table.arity(), 1);
  put_le(out, static_cast<u128>(table.lead_exp()), 1);
  put_le(out, static_cast<u128>(table.constraint_exp()), 1);
  put_le(out, table.box(), 8);
  put_le(out, table.size(), 8);
  for (const auto& e : table.entries()) {
    put_le(out, static_cast<u128>(e.key), 16);
    put_le(out, e.count, 8);
  }
  if (!out) throw std::runtime_error("failed writing table");
}

FreqTable read_table(std::istream& in) {
  std::array<char, kMagicLen> magic{};
  if (!in.read(magic.data(), kMagicLen)) throw CacheCorrupt("cache file truncated in header");
  if (std::memcmp(magic.data(), kCacheMagic, kMagicLen - 1) != 0) throw CacheCorrupt("bad cache magic");
  if (magic[kMagicLen - 1] != kCacheMagic[kMagicLen - 1])
    throw CacheVersionMismatch(std::string("cache format version ") + magic[kMagicLen - 1] + ", expected " +
                               kCacheMagic[kMagicLen - 1]);
  const auto kind = static_cast<unsigned>(get_le(in, 1));
  if (kind > 2) throw CacheCorrupt("unknown table kind " + std::to_string(kind));
  const auto arity = static_cast<unsigned>(get_le(in, 1));
  const auto lead = static_cast<int>(get_le(in, 1));
  const auto constraint = static_cast<int>(get_le(in, 1));
  const auto B = static_cast<u64>(get_le(in, 8));
  const auto count = static_cast<u64>(get_le(in, 8));

  // Guard the reservation against a corrupt count.
  in.seekg(0, std::ios::end);
  const auto end = in.tellg();
  in.seekg(25, std::ios::beg);
  if (end >= 0 && static_cast<u64>(end) != 25 + count * kRecordLen)
    throw CacheCorrupt("cache file length does not match entry count");

  std::vector<TableEntry> entries;
  entries.reserve(count);
  for (u64 i = 0; i < count; ++i) {
    const auto key = static_cast<i128>(get_le(in, 16));
    const auto c = static_cast<u64>(get_le(in, 8));
    entries.push_back({key, c});
  }
  try {
    return FreqTable(static_cast<TableKind>(kind), lead, constraint, arity, B, std::move(entries));
  } catch (const std::exception& e) {
    throw CacheCorrupt(std::string("invalid cached table: ") + e.what());
  }
}

void save_table(const std::filesystem::path& path, const FreqTable& table) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    write_table(out, table);
  }
  std::filesystem::rename(tmp, path);
}

FreqTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheCorrupt("cannot open " + path.string());
  return read_table(in);
}

std::string cache_file_name(TableKind kind, int lead_exp, int constraint_exp, u64 B) {
  return std::string(table_kind_tag(kind)) + "_" + std::to_string(lead_exp) + "_" + std::to_string(constraint_exp) +
         "_" + std::to_string(B) + ".pauc";
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("PAUC_CACHE_DIR"); env != nullptr && *env != '\0') return env;
  return ".pauc-cache";
}

}  // namespace pauc
