#pragma once

#include "ssum/common.hpp"

namespace ssum {

// Montgomery arithmetic mod an odd q, radix R = 2^64. mul(a, b) returns
// a*b*R^{-1} mod q in canonical form and is exact for any operands with
// a*b < q * 2^64 (in particular whenever either operand is < q); it
// additionally requires q < 2^63, which the transform moduli satisfy, while
// mul_any accepts any odd q < 2^64 at the cost of explicit carry handling.
// Keeping one operand in Montgomery form (x*R) makes mul an exact modular
// multiply, which is how the transform twiddles and all scale constants are
// stored: the data itself stays in plain form.
struct Montgomery {
    u64 q;
    u64 neg_qinv;  // -q^{-1} mod 2^64
    u64 r1;        // 2^64  mod q  (Montgomery form of 1)
    u64 r2;        // 2^128 mod q

    constexpr explicit Montgomery(u64 modulus) : q(modulus), neg_qinv(0), r1(0), r2(0) {
        u64 x = q;  // q odd => q*q == 1 (mod 8); Newton doubles correct bits each step
        for (int i = 0; i < 6; ++i) x *= 2 - q * x;
        neg_qinv = 0 - x;
        r1 = static_cast<u64>((static_cast<u128>(1) << 64) % q);
        r2 = static_cast<u64>(static_cast<u128>(r1) * r1 % q);
    }

    // Hot-path reduction, q < 2^63 only: t + m*q < 2^127 + 2^127 cannot wrap.
    constexpr u64 mul(u64 a, u64 b) const noexcept {
        const u128 t = static_cast<u128>(a) * b;
        const u64 m = static_cast<u64>(t) * neg_qinv;
        const u64 v = static_cast<u64>((t + static_cast<u128>(m) * q) >> 64);
        return v >= q ? v - q : v;
    }

    // Same contract for any odd q < 2^64. The low halves of t and m*q cancel
    // mod 2^64 by choice of m, so sum the high halves plus that carry; adding
    // t + m*q in 128 bits can pass 2^128 once q nears the radix.
    constexpr u64 mul_any(u64 a, u64 b) const noexcept {
        const u128 t = static_cast<u128>(a) * b;
        const u64 m = static_cast<u64>(t) * neg_qinv;
        const u128 mq = static_cast<u128>(m) * q;
        const u128 v = (t >> 64) + (mq >> 64) + (static_cast<u64>(t) != 0 ? 1 : 0);
        return static_cast<u64>(v >= q ? v - q : v);
    }

    constexpr u64 to_mont(u64 a) const noexcept { return mul_any(a, r2); }
    constexpr u64 from_mont(u64 a) const noexcept { return mul_any(a, 1); }

    constexpr u64 add(u64 a, u64 b) const noexcept {
        const u64 gap = q - b;
        return a >= gap ? a - gap : a + b;
    }
    constexpr u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + (q - b); }

    // a mod q for any a < 2^64 (two reductions; avoids a hardware divide).
    constexpr u64 reduce(u64 a) const noexcept { return mul_any(to_mont(a), 1); }
};

constexpr u64 pow_mod_const(u64 base, u64 exp, u64 m) noexcept {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = static_cast<u64>(static_cast<u128>(r) * base % m);
        base = static_cast<u64>(static_cast<u128>(base) * base % m);
        exp >>= 1;
    }
    return r;
}

}  // namespace ssum
