#pragma once

#include <cstdint>
#include <string>

namespace degcorr {

// GCC/Clang extension; wide enough for every moment sum with |E|, degrees <= 2^31.
__extension__ using Int128 = __int128;
__extension__ using UInt128 = unsigned __int128;

inline long double to_long_double(Int128 v) { return static_cast<long double>(v); }

std::string to_string(Int128 v);

}  // namespace degcorr
