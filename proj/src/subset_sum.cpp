#include "ssum/subset_sum.hpp"

#include <string>

#include "ssum/errors.hpp"
#include "ssum/ntt_primes.hpp"
#include "ssum/series_exp.hpp"

namespace ssum {

namespace {

void check_target_supported(u64 target) {
    if (target >= (u64{1} << kNttMaxLogLen))
        throw SizeOverflow("target " + std::to_string(target) + " exceeds the supported 2^" +
                           std::to_string(kNttMaxLogLen) + " - 1");
}

}  // namespace

ItemHistogram build_histogram(const Instance& inst) {
    ItemHistogram hist;
    hist.target = inst.target;
    hist.counts.assign(static_cast<std::size_t>(inst.target) + 1, 0);
    for (u64 s : inst.items) {
        if (s == 0) throw NonPositiveItem("items must be positive");
        if (s > inst.target) {
            ++hist.dropped;  // can never appear in a subset summing to <= target
        } else {
            ++hist.counts[static_cast<std::size_t>(s)];
        }
    }
    return hist;
}

ModPoly build_log_series(const ItemHistogram& hist, const PrimeField& field) {
    const u64 p = field.modulus();
    const u64 t = hist.target;
    if (p <= t)
        throw FieldTooSmall("log series to order " + std::to_string(t) +
                            " needs a modulus above it, got " + std::to_string(p));
    std::vector<u64> local_inv;
    const u64* inv;
    if (field.inv_cap() >= t) {
        inv = field.inverse_table().data();
    } else {
        local_inv = build_inverse_table(t, field);
        inv = local_inv.data();
    }
    std::vector<u64> series(static_cast<std::size_t>(t) + 1, 0);
    for (u64 s = 1; s <= t; ++s) {
        const u64 mult = hist.counts[static_cast<std::size_t>(s)] % p;
        if (mult == 0) continue;
        // log(1 + x^s) = sum_j (-1)^{j-1} x^{js} / j, truncated at t.
        for (u64 j = 1; j * s <= t; ++j) {
            const u64 term = field.mul(mult, inv[j]);
            u64& slot = series[static_cast<std::size_t>(j * s)];
            slot = (j & 1) ? field.add(slot, term) : field.sub(slot, term);
        }
    }
    return ModPoly(std::move(series), field);
}

ModPoly coefficients_mod_p(const Instance& inst, const PrimeField& field) {
    check_target_supported(inst.target);
    const ItemHistogram hist = build_histogram(inst);
    const ModPoly log_series = build_log_series(hist, field);
    return exp_series(log_series, static_cast<std::size_t>(inst.target));
}

u64 count_mod_p(const Instance& inst, const PrimeField& field) {
    return coefficients_mod_p(inst, field).coeffs[static_cast<std::size_t>(inst.target)];
}

u64 knapsack_count_mod_p(const Instance& inst, const PrimeField& field) {
    const ModPoly coeffs = coefficients_mod_p(inst, field);
    u64 acc = 0;
    for (u64 c : coeffs.coeffs) acc = field.add(acc, c);
    return acc;
}

std::pair<u64, u64> prime_interval(std::size_t n, u64 t) {
    const u64 lo = t + 1;
    const u64 cap = u64{1} << 62;
    const u128 base = static_cast<u128>(n) + t;
    u128 hi = base >= (u128{1} << 21) ? static_cast<u128>(cap) : base * base * base;
    const u128 floor_width = static_cast<u128>(t) * 2 + 64;
    if (hi < floor_width) hi = floor_width;
    if (hi > cap) hi = static_cast<u128>(cap);
    return {lo, static_cast<u64>(hi)};
}

u64 sample_working_prime(std::size_t n, u64 t, u64 seed) {
    const auto [lo, hi] = prime_interval(n, t);
    PrimeSampler sampler(lo, hi, seed);
    try {
        return sampler.sample();
    } catch (const NoPrimeFound& e) {
        throw PrimeSamplingFailed(e.what());
    }
}

Decision decide(const Instance& inst, u64 seed, unsigned repeats) {
    if (repeats == 0) throw std::invalid_argument("repeats must be at least 1");
    Decision result;
    result.seed = seed;
    result.repeats = repeats;
    if (inst.target == 0) {  // the empty subset; no sampling needed
        result.yes = true;
        return result;
    }
    check_target_supported(inst.target);
    for (unsigned round = 0; round < repeats; ++round) {
        const u64 round_seed = splitmix64(seed + round);
        const u64 p = sample_working_prime(inst.items.size(), inst.target, round_seed);
        const PrimeField field(p, inst.target);
        const u64 count = count_mod_p(inst, field);
        result.rounds.push_back({p, count});
        if (count != 0) {  // witnessed: the true count is nonzero
            result.yes = true;
            break;
        }
    }
    return result;
}

}  // namespace ssum
