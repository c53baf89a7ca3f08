#include "ssum/series_exp.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "ssum/errors.hpp"
#include "ssum/ntt.hpp"

namespace ssum {

namespace {

constexpr std::size_t kBaseCutoff = 32;    // segments this small run the plain recurrence
constexpr std::size_t kDirectCross = 128;  // cross windows this small skip the transform
constexpr std::size_t kParallelMin = std::size_t{1} << 15;

struct Prologue {
    const PrimeField& field;
    std::vector<u64> w;    // w[k] = k * f_k
    std::vector<u64> g;    // accumulators; g[i] is final once index i is finished
    std::vector<u64> local_inv;
    const u64* inv;        // inverses of 1..t

    Prologue(const ModPoly& f, std::size_t t) : field(*f.field) {
        if (t >= field.modulus())
            throw FieldTooSmall("series exp to order " + std::to_string(t) +
                                " needs a modulus above it, got " +
                                std::to_string(field.modulus()));
        if (!f.coeffs.empty() && f.coeffs[0] != 0) throw NonzeroConstantTerm();
        w.assign(t + 1, 0);
        for (std::size_t k = 1; k <= t; ++k) w[k] = field.mul(k, f.at(k));  // k < p since t < p
        g.assign(t + 1, 0);
        g[0] = 1 % field.modulus();
        if (field.inv_cap() >= t) {
            inv = field.inverse_table().data();
        } else {
            local_inv = build_inverse_table(t, field);
            inv = local_inv.data();
        }
    }
};

class ExpEngine : Prologue {
public:
    ExpEngine(const ModPoly& f, std::size_t t)
        : Prologue(f, t), t_(t), crt_(field.modulus()) {
        if (t + 1 > kDirectCross) plan_ = &NttPlan::shared_for(t + 1);
        fhat_cache_limit_ = std::max<std::size_t>(kDirectCross, (t + 1) / 8);
    }

    std::vector<u64> run() {
        compute(0, t_);
        return std::move(g);
    }

private:
    void compute(std::size_t l, std::size_t r) {
        if (r - l + 1 <= kBaseCutoff) {
            base_case(l, r);
            return;
        }
        const std::size_t mid = l + (r - l) / 2;
        compute(l, mid);
        cross(l, mid, r);
        compute(mid + 1, r);
    }

    // Finalize g[l..r] directly: whatever the crosses accumulated plus the
    // in-segment terms, divided by the index.
    void base_case(std::size_t l, std::size_t r) {
        for (std::size_t i = std::max<std::size_t>(l, 1); i <= r; ++i) {
            u64 acc = g[i];
            for (std::size_t j = l; j < i; ++j)
                acc = field.add(acc, field.mul(w[i - j], g[j]));
            g[i] = field.mul(inv[i], acc);
        }
    }

    // Add sum_{j=l}^{m} w[i-j] * g[j] to g[i] for every i in (m, r]. g[l..m]
    // is final by the recursion order, and i - j <= r - l keeps w in range.
    void cross(std::size_t l, std::size_t m, std::size_t r) {
        const std::size_t len = r - l + 1;
        if (len <= kDirectCross) {
            for (std::size_t i = m + 1; i <= r; ++i) {
                u64 acc = 0;
                for (std::size_t j = l; j <= m; ++j)
                    acc = field.add(acc, field.mul(w[i - j], g[j]));
                g[i] = field.add(g[i], acc);
            }
            return;
        }

        // One cyclic convolution of size bit_ceil(len) suffices: the full
        // product has degree below 3*len/2 - 1, so wrapped terms land only on
        // indices below ceil(len/2) -- under the window [m-l+1, r-l] read out.
        const std::size_t n = std::bit_ceil(len);
        const std::size_t glen = m - l + 1;
        for (int md = 0; md < 3; ++md) {
            const u64 q = kNttModuli[md].prime;
            const std::vector<u64>& fh = fhat(md, len, n);
            std::vector<u64>& gb = gbuf_[md];
            gb.assign(n, 0);
            reduce_into(gb.data(), g.data() + l, glen, q);
            plan_->forward(md, gb);
            plan_->pointwise_mont(md, gb, fh);
            plan_->inverse_conv(md, gb);
        }
        const u64* h0 = gbuf_[0].data();
        const u64* h1 = gbuf_[1].data();
        const u64* h2 = gbuf_[2].data();
        u64* gp = g.data();
        const std::size_t lo = m + 1, hi = r;
        if (hi - lo + 1 >= kParallelMin) {
#pragma omp parallel for schedule(static)
            for (std::size_t i = lo; i <= hi; ++i)
                gp[i] = field.add(gp[i], crt_.combine(h0[i - l], h1[i - l], h2[i - l]));
        } else {
            for (std::size_t i = lo; i <= hi; ++i)
                gp[i] = field.add(gp[i], crt_.combine(h0[i - l], h1[i - l], h2[i - l]));
        }
    }

    // Forward transform of (w[0..len-1], zero-padded to n) under modulus md.
    // This depends on the segment length only, so segments at the same depth
    // share it; small lengths recur often and are worth caching.
    const std::vector<u64>& fhat(int md, std::size_t len, std::size_t n) {
        const bool cache = len <= fhat_cache_limit_;
        std::vector<u64>& slot = cache ? fhat_cache_[len][md] : fbuf_[md];
        if (cache && !slot.empty()) return slot;
        const u64 q = kNttModuli[md].prime;
        slot.assign(n, 0);
        reduce_into(slot.data(), w.data(), len, q);
        plan_->forward(md, slot);
        return slot;
    }

    // Canonical residues mod p < 2^64 < 4q need at most three subtractions.
    static void reduce_into(u64* dst, const u64* src, std::size_t count, u64 q) {
        for (std::size_t i = 0; i < count; ++i) {
            u64 x = src[i];
            while (x >= q) x -= q;
            dst[i] = x;
        }
    }

    std::size_t t_;
    CrtCombiner crt_;
    const NttPlan* plan_ = nullptr;
    std::size_t fhat_cache_limit_;
    std::array<std::vector<u64>, 3> gbuf_;
    std::array<std::vector<u64>, 3> fbuf_;
    std::unordered_map<std::size_t, std::array<std::vector<u64>, 3>> fhat_cache_;
};

}  // namespace

ModPoly exp_series(const ModPoly& f, std::size_t t) {
    if (f.field == nullptr) throw std::invalid_argument("polynomial without a field");
    ExpEngine engine(f, t);
    return ModPoly(engine.run(), *f.field);
}

ModPoly exp_series_naive(const ModPoly& f, std::size_t t) {
    if (f.field == nullptr) throw std::invalid_argument("polynomial without a field");
    Prologue pro(f, t);
    const PrimeField& field = pro.field;
    for (std::size_t i = 1; i <= t; ++i) {
        u64 acc = 0;
        for (std::size_t j = 0; j < i; ++j)
            acc = field.add(acc, field.mul(pro.w[i - j], pro.g[j]));
        pro.g[i] = field.mul(pro.inv[i], acc);
    }
    return ModPoly(std::move(pro.g), field);
}

}  // namespace ssum
