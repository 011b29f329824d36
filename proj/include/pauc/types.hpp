#pragma once

#include <cstdint>
#include <string>

namespace pauc {

using i128 = __int128;
using u128 = unsigned __int128;
using u64 = std::uint64_t;
using i64 = std::int64_t;

std::string to_string(i128 v);
std::string to_string(u128 v);

}  // namespace pauc
