#pragma once

#include "ssum/common.hpp"

namespace ssum {

// Internal transform moduli. Convolutions over an arbitrary prime field are
// computed exactly: transform under each of these three fixed primes, then
// reconstruct the true integer coefficient by CRT and reduce it mod the
// target prime. Requirements baked into the choice:
//
//   * q = c * 2^28 + 1, so the multiplicative group has 2-adic valuation 28
//     and supports power-of-two transforms up to 2^26 with headroom;
//   * q < 2^62, so Montgomery products and butterfly sums stay in 64 bits;
//   * q1*q2*q3 > 2^186, comfortably above the worst-case convolution
//     coefficient 2^26 * (2^64)^2 = 2^154, so CRT reconstruction is exact.
//
// `generator` is a primitive root of the full multiplicative group mod q.
struct NttModulus {
    u64 prime;
    u64 generator;
};

inline constexpr NttModulus kNttModuli[3] = {
    {4611685984336084993ULL, 15},  // 17179869057 * 2^28 + 1
    {4611685982725472257ULL, 5},   // 17179869051 * 2^28 + 1
    {4611685976283021313ULL, 11},  // 17179869027 * 2^28 + 1
};

// Largest supported transform length, as a log2.
inline constexpr int kNttMaxLogLen = 26;

}  // namespace ssum
