#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>

namespace ssum {

using u32  = std::uint32_t;
using u64  = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// SplitMix64 mixer; used to derive independent per-round RNG seeds.
constexpr u64 splitmix64(u64 x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace ssum
