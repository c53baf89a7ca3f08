#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "ssum/common.hpp"
#include "ssum/errors.hpp"
#include "ssum/montgomery.hpp"
#include "ssum/ntt_primes.hpp"

namespace ssum {

class PrimeField;

// Precomputed tables (bit-reversal, twiddles, inverse scales) for power-of-two
// transforms under the three internal moduli. A plan built for size n serves
// every power-of-two length <= n: the twiddle layout tw[half + j] depends only
// on the butterfly span, not on the transform length. Immutable once built.
class NttPlan {
public:
    // size must be a power of two; throws SizeOverflow above 2^kNttMaxLogLen.
    explicit NttPlan(std::size_t size);

    std::size_t size() const noexcept { return n_; }

    // Primitive size()-th root of unity mod kNttModuli[m].prime (plain form).
    u64 root(int m) const noexcept { return per_[m].root; }

    // In-place transforms of v (plain residues mod kNttModuli[m].prime).
    // v.size() must be a power of two <= size(). forward() evaluates at
    // successive powers of the v.size()-th root, in natural order; inverse()
    // is its exact inverse including the 1/n scale.
    void forward(int m, std::vector<u64>& v) const;
    void inverse(int m, std::vector<u64>& v) const;

    // Convolution path: after pointwise_mont (which leaves a stray R^{-1} on
    // every entry), inverse_conv folds both that factor and 1/n into its final
    // scale, returning exact plain residues.
    void pointwise_mont(int m, std::vector<u64>& a, const std::vector<u64>& b) const;
    void inverse_conv(int m, std::vector<u64>& v) const;

    // Process-wide plan, grown geometrically; min_len is rounded up to a power
    // of two. References stay valid only until the next call asks for a larger
    // plan, so callers grab the plan once per operation at its final size.
    static const NttPlan& shared_for(std::size_t min_len);

private:
    struct PerModulus {
        u64 root = 0;
        std::vector<u64> tw, itw;        // Montgomery-form twiddles, tw[half + j]
        std::array<u64, kNttMaxLogLen + 1> inv_scale{};   // n^{-1} * R    (inverse)
        std::array<u64, kNttMaxLogLen + 1> conv_scale{};  // n^{-1} * R^2  (inverse_conv)
    };

    void check_len(std::size_t len) const;
    void bit_reverse(std::vector<u64>& v) const;
    void butterflies(int m, std::vector<u64>& v, bool invert) const;
    void scale(int m, std::vector<u64>& v, u64 factor) const;

    std::size_t n_;
    int logn_;
    std::vector<u32> rev_;  // bit-reversal permutation for length n_
    std::array<PerModulus, 3> per_;
};

// Value-returning wrappers over NttPlan::forward / NttPlan::inverse.
std::vector<u64> ntt_forward(std::vector<u64> values, const NttPlan& plan, int modulus_index);
std::vector<u64> ntt_inverse(std::vector<u64> values, const NttPlan& plan, int modulus_index);

// Garner reconstruction from residues under the three internal moduli: the
// unique integer below q1*q2*q3 with those residues, reduced mod the target
// prime p. Precomputes the per-p constants once; combine() is then two or
// three Montgomery multiplies per coefficient.
class CrtCombiner {
public:
    explicit CrtCombiner(u64 p);
    u64 modulus() const noexcept { return p_; }
    u64 combine(u64 r0, u64 r1, u64 r2) const noexcept;

private:
    u64 p_;
    Montgomery mp_;      // target-modulus context (odd p); unused for p == 2
    u64 q0_mont_ = 0;    // q0 mod p,    Montgomery form
    u64 q0q1_mont_ = 0;  // q0*q1 mod p, Montgomery form
};

// One-coefficient convenience wrapper.
u64 crt_combine(u64 r0, u64 r1, u64 r2, const PrimeField& field);

}  // namespace ssum
