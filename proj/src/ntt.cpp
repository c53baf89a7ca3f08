#include "ssum/ntt.hpp"

#include <bit>
#include <memory>
#include <stdexcept>

#include "ssum/field.hpp"

namespace ssum {

namespace {

constexpr Montgomery kMont[3] = {
    Montgomery(kNttModuli[0].prime),
    Montgomery(kNttModuli[1].prime),
    Montgomery(kNttModuli[2].prime),
};

// Below this many elements the per-stage OpenMP regions cost more than they
// save, so the kernels fall through to plain serial loops.
constexpr std::size_t kParallelMin = std::size_t{1} << 15;

constexpr u64 Q0 = kNttModuli[0].prime;
constexpr u64 Q1 = kNttModuli[1].prime;
constexpr u64 Q2 = kNttModuli[2].prime;

// Garner step constants (Montgomery form under the modulus they act in).
constexpr u64 kInvQ0modQ1 = pow_mod_const(Q0 % Q1, Q1 - 2, Q1);
constexpr u64 kQ0Q1modQ2 =
    static_cast<u64>(static_cast<u128>(Q0 % Q2) * (Q1 % Q2) % Q2);
constexpr u64 kInvQ0modQ1Mont = kMont[1].to_mont(kInvQ0modQ1);
constexpr u64 kQ0modQ2Mont = kMont[2].to_mont(Q0 % Q2);
constexpr u64 kInvQ0Q1modQ2Mont = kMont[2].to_mont(pow_mod_const(kQ0Q1modQ2, Q2 - 2, Q2));

}  // namespace

NttPlan::NttPlan(std::size_t size) : n_(size) {
    if (n_ == 0 || !std::has_single_bit(n_)) throw std::invalid_argument("plan size must be a power of two");
    if (n_ > (std::size_t{1} << kNttMaxLogLen))
        throw SizeOverflow("transform length " + std::to_string(n_) + " exceeds 2^" +
                           std::to_string(kNttMaxLogLen));
    logn_ = std::countr_zero(n_);

    rev_.assign(n_, 0);
    for (std::size_t i = 1; i < n_; ++i)
        rev_[i] = (rev_[i >> 1] >> 1) | static_cast<u32>((i & 1) << (logn_ - 1));

    for (int m = 0; m < 3; ++m) {
        const u64 q = kNttModuli[m].prime;
        const Montgomery& mont = kMont[m];
        PerModulus& pm = per_[m];

        pm.root = pow_mod_const(kNttModuli[m].generator, (q - 1) / n_, q);
        if (pow_mod_const(pm.root, n_, q) != 1 ||
            (n_ > 1 && pow_mod_const(pm.root, n_ / 2, q) != q - 1))
            throw std::logic_error("transform root is not primitive");
        const u64 iroot = pow_mod_const(pm.root, n_ - 1, q);

        auto build = [&](std::vector<u64>& tab, u64 base) {
            tab.assign(n_, 0);
            for (std::size_t half = 1; half < n_; half <<= 1) {
                // Primitive (2*half)-th root; the layout is length-agnostic.
                const u64 wm = mont.to_mont(pow_mod_const(base, n_ / (2 * half), q));
                tab[half] = mont.r1;
                for (std::size_t j = 1; j < half; ++j)
                    tab[half + j] = mont.mul(tab[half + j - 1], wm);
            }
        };
        build(pm.tw, pm.root);
        build(pm.itw, iroot);

        const u64 inv2 = (q + 1) / 2;
        for (int k = 0; k <= logn_; ++k) {
            const u64 invn = pow_mod_const(inv2, static_cast<u64>(k), q);
            pm.inv_scale[k] = mont.to_mont(invn);
            pm.conv_scale[k] = mont.to_mont(mont.to_mont(invn));
        }
    }
}

void NttPlan::check_len(std::size_t len) const {
    if (len == 0 || !std::has_single_bit(len) || len > n_)
        throw std::invalid_argument("transform length must be a power of two within the plan size");
}

void NttPlan::bit_reverse(std::vector<u64>& v) const {
    const int shift = logn_ - std::countr_zero(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::size_t j = rev_[i] >> shift;
        if (i < j) std::swap(v[i], v[j]);
    }
}

void NttPlan::butterflies(int m, std::vector<u64>& v, bool invert) const {
    const Montgomery& mont = kMont[m];
    const std::vector<u64>& tab = invert ? per_[m].itw : per_[m].tw;
    u64* x = v.data();
    const std::size_t len = v.size();
    for (std::size_t half = 1; half < len; half <<= 1) {
        const u64* w = tab.data() + half;
        if (len >= kParallelMin) {
#pragma omp parallel for collapse(2) schedule(static)
            for (std::size_t blk = 0; blk < len; blk += 2 * half) {
                for (std::size_t j = 0; j < half; ++j) {
                    const u64 a = x[blk + j];
                    const u64 b = mont.mul(w[j], x[blk + j + half]);
                    x[blk + j] = mont.add(a, b);
                    x[blk + j + half] = mont.sub(a, b);
                }
            }
        } else {
            for (std::size_t blk = 0; blk < len; blk += 2 * half) {
                for (std::size_t j = 0; j < half; ++j) {
                    const u64 a = x[blk + j];
                    const u64 b = mont.mul(w[j], x[blk + j + half]);
                    x[blk + j] = mont.add(a, b);
                    x[blk + j + half] = mont.sub(a, b);
                }
            }
        }
    }
}

void NttPlan::scale(int m, std::vector<u64>& v, u64 factor) const {
    const Montgomery& mont = kMont[m];
    u64* x = v.data();
    const std::size_t len = v.size();
    if (len >= kParallelMin) {
#pragma omp parallel for schedule(static)
        for (std::size_t i = 0; i < len; ++i) x[i] = mont.mul(x[i], factor);
    } else {
        for (std::size_t i = 0; i < len; ++i) x[i] = mont.mul(x[i], factor);
    }
}

void NttPlan::forward(int m, std::vector<u64>& v) const {
    check_len(v.size());
    bit_reverse(v);
    butterflies(m, v, false);
}

void NttPlan::inverse(int m, std::vector<u64>& v) const {
    check_len(v.size());
    bit_reverse(v);
    butterflies(m, v, true);
    scale(m, v, per_[m].inv_scale[std::countr_zero(v.size())]);
}

void NttPlan::inverse_conv(int m, std::vector<u64>& v) const {
    check_len(v.size());
    bit_reverse(v);
    butterflies(m, v, true);
    scale(m, v, per_[m].conv_scale[std::countr_zero(v.size())]);
}

void NttPlan::pointwise_mont(int m, std::vector<u64>& a, const std::vector<u64>& b) const {
    if (a.size() != b.size()) throw std::invalid_argument("pointwise product needs equal lengths");
    const Montgomery& mont = kMont[m];
    u64* x = a.data();
    const u64* y = b.data();
    const std::size_t len = a.size();
    if (len >= kParallelMin) {
#pragma omp parallel for schedule(static)
        for (std::size_t i = 0; i < len; ++i) x[i] = mont.mul(x[i], y[i]);
    } else {
        for (std::size_t i = 0; i < len; ++i) x[i] = mont.mul(x[i], y[i]);
    }
}

const NttPlan& NttPlan::shared_for(std::size_t min_len) {
    if (min_len > (std::size_t{1} << kNttMaxLogLen))
        throw SizeOverflow("transform length " + std::to_string(min_len) + " exceeds 2^" +
                           std::to_string(kNttMaxLogLen));
    const std::size_t n = std::max<std::size_t>(64, std::bit_ceil(std::max<std::size_t>(min_len, 1)));
    thread_local std::unique_ptr<NttPlan> plan;
    if (!plan || plan->size() < n) plan = std::make_unique<NttPlan>(n);
    return *plan;
}

std::vector<u64> ntt_forward(std::vector<u64> values, const NttPlan& plan, int modulus_index) {
    plan.forward(modulus_index, values);
    return values;
}

std::vector<u64> ntt_inverse(std::vector<u64> values, const NttPlan& plan, int modulus_index) {
    plan.inverse(modulus_index, values);
    return values;
}

CrtCombiner::CrtCombiner(u64 p) : p_(p), mp_((p & 1) ? p : 1) {
    if (p & 1) {
        q0_mont_ = mp_.to_mont(Q0 % p);
        q0q1_mont_ = mp_.to_mont(static_cast<u64>(static_cast<u128>(Q0 % p) * (Q1 % p) % p));
    }
}

u64 CrtCombiner::combine(u64 r0, u64 r1, u64 r2) const noexcept {
    // Garner: value = r0 + Q0*t1 + Q0*Q1*t2 with t1 < Q1, t2 < Q2, so the
    // reconstructed integer is the unique one below Q0*Q1*Q2.
    const u64 r0q1 = r0 >= Q1 ? r0 - Q1 : r0;  // r0 < Q0 < 2*Q1
    const u64 t1 = kMont[1].mul(kMont[1].sub(r1, r0q1), kInvQ0modQ1Mont);
    const u64 r0q2 = r0 >= Q2 ? r0 - Q2 : r0;
    const u64 x2 = kMont[2].add(r0q2, kMont[2].mul(t1, kQ0modQ2Mont));
    const u64 t2 = kMont[2].mul(kMont[2].sub(r2, x2), kInvQ0Q1modQ2Mont);
    if (p_ == 2) return (r0 + t1 + t2) & 1;  // the internal moduli are odd
    // mul_any: p may sit anywhere below 2^64. t1, t2 < 2^62 keep the
    // products inside the reduction's a*b < p*2^64 bound.
    const u64 a = mp_.mul_any(t1, q0_mont_);
    const u64 b = mp_.mul_any(t2, q0q1_mont_);
    return mp_.add(mp_.add(a, b), mp_.reduce(r0));
}

u64 crt_combine(u64 r0, u64 r1, u64 r2, const PrimeField& field) {
    return CrtCombiner(field.modulus()).combine(r0, r1, r2);
}

}  // namespace ssum
