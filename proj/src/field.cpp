#include "ssum/field.hpp"

#include <bit>

namespace ssum {

namespace {

u64 mul_mod(u64 a, u64 b, u64 m) noexcept {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) noexcept {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Miller-Rabin for one witness; q - 1 = d * 2^s with d odd.
bool witness_passes(u64 q, u64 d, int s, u64 a) noexcept {
    u64 x = pow_mod(a, d, q);
    if (x == 1 || x == q - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, q);
        if (x == q - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(u64 q) noexcept {
    if (q < 2) return false;
    for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (q == sp) return true;
        if (q % sp == 0) return false;
    }
    u64 d = q - 1;
    int s = std::countr_zero(d);
    d >>= s;
    // First twelve primes: a complete witness set for q < 3.3e24.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (!witness_passes(q, d, s, a)) return false;
    }
    return true;
}

PrimeField::PrimeField(u64 p, u64 inv_cap) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    if (inv_cap > 0) inv_ = build_inverse_table(inv_cap, *this);
}

u64 PrimeField::pow(u64 base, u64 exp) const noexcept { return pow_mod(base, exp, p_); }

u64 PrimeField::inv(u64 a) const {
    if (a == 0) throw ZeroInverse();
    // Extended Euclid on (a, p); p prime so gcd is 1.
    i128 t = 0, new_t = 1;
    i128 r = static_cast<i128>(p_), new_r = static_cast<i128>(a % p_);
    while (new_r != 0) {
        i128 q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += static_cast<i128>(p_);
    return static_cast<u64>(t);
}

std::vector<u64> build_inverse_table(u64 cap, const PrimeField& field) {
    const u64 p = field.modulus();
    if (cap >= p)
        throw CapExceedsModulus("inverse-table cap " + std::to_string(cap) +
                                " must be below modulus " + std::to_string(p));
    std::vector<u64> inv(static_cast<std::size_t>(cap) + 1, 0);
    if (cap >= 1) inv[1] = 1 % p;
    for (u64 j = 2; j <= cap; ++j) {
        // p = (p/j)*j + (p%j)  =>  j^{-1} = -(p/j) * (p%j)^{-1}
        inv[j] = mul_mod(p - p / j, inv[p % j], p);
    }
    return inv;
}

PrimeSampler::PrimeSampler(u64 lo, u64 hi, u64 seed) : lo_(lo), hi_(hi), rng_(seed) {
    if (lo < 2 || hi < lo) throw std::invalid_argument("bad prime sampling interval");
    budget_ = 64 * static_cast<u64>(std::bit_width(hi - 1));  // 64 * ceil(log2 hi)
}

u64 PrimeSampler::sample() {
    const u64 span = hi_ - lo_ + 1;  // hi < 2^64 - 1 in practice; span never wraps for lo >= 2
    const u64 zone = (0 - span) % span;  // 2^64 mod span; rejecting below keeps the draw uniform
    for (u64 tries = 0; tries < budget_; ++tries) {
        u64 r = rng_();
        while (r < zone) r = rng_();
        u64 candidate = lo_ + (r - zone) % span;
        if (is_prime(candidate)) return candidate;
    }
    throw NoPrimeFound("no prime found in [" + std::to_string(lo_) + ", " + std::to_string(hi_) +
                       "] after " + std::to_string(budget_) + " draws");
}

}  // namespace ssum
