#pragma once

#include <random>
#include <vector>

#include "ssum/common.hpp"
#include "ssum/errors.hpp"

namespace ssum {

// Deterministic primality test for any 64-bit value (trial division by small
// primes, then Miller-Rabin with a witness set proven complete below 3.3e24).
bool is_prime(u64 q) noexcept;

// Arithmetic in Z/pZ for a prime p < 2^64. All residues are canonical, i.e.
// in [0, p). Immutable after construction; safe to share across threads.
class PrimeField {
public:
    // Throws std::invalid_argument if p is not prime, CapExceedsModulus if
    // inv_cap >= p. inv_cap = n precomputes inverses of 1..n for O(1) lookup.
    explicit PrimeField(u64 p, u64 inv_cap = 0);

    u64 modulus() const noexcept { return p_; }
    u64 inv_cap() const noexcept { return inv_.empty() ? 0 : inv_.size() - 1; }

    u64 add(u64 a, u64 b) const noexcept {
        // a + b may exceed 2^64; compare against p - b instead of summing.
        const u64 gap = p_ - b;
        return a >= gap ? a - gap : a + b;
    }
    u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
    u64 neg(u64 a) const noexcept { return a == 0 ? 0 : p_ - a; }
    u64 mul(u64 a, u64 b) const noexcept { return static_cast<u64>(static_cast<u128>(a) * b % p_); }
    u64 reduce(u64 x) const noexcept { return x % p_; }

    u64 pow(u64 base, u64 exp) const noexcept;

    // Extended-Euclid inverse; throws ZeroInverse on a == 0.
    u64 inv(u64 a) const;

    // Table lookup for 1 <= j <= inv_cap(); throws std::out_of_range otherwise.
    u64 inv_of_index(u64 j) const {
        if (j == 0 || j > inv_cap()) throw std::out_of_range("index outside inverse table");
        return inv_[j];
    }

    // inverse_table()[j] == inv(j) for 1 <= j <= cap; entry 0 is unused (0).
    const std::vector<u64>& inverse_table() const noexcept { return inv_; }

private:
    u64 p_;
    std::vector<u64> inv_;
};

// inv[j] = j^{-1} mod p for 1 <= j <= cap, built with the classic linear
// recurrence inv[j] = -(p/j) * inv[p mod j]. Entry 0 is unused. Throws
// CapExceedsModulus if cap >= p.
std::vector<u64> build_inverse_table(u64 cap, const PrimeField& field);

// Uniform rejection sampling of primes from [lo, hi]. Deterministic given the
// seed. sample() throws NoPrimeFound once the retry budget (64 * ceil(log2 hi)
// draws) is exhausted, so prime-free intervals fail fast instead of looping.
class PrimeSampler {
public:
    PrimeSampler(u64 lo, u64 hi, u64 seed);

    u64 lo() const noexcept { return lo_; }
    u64 hi() const noexcept { return hi_; }

    u64 sample();

private:
    u64 lo_, hi_;
    u64 budget_;
    std::mt19937_64 rng_;
};

}  // namespace ssum
