#include "ssum/oracle.hpp"

#include <bit>
#include <string>

#include "ssum/errors.hpp"

namespace ssum {

ModPoly dp_count_mod_p(const Instance& inst, const PrimeField& field) {
    const u64 t = inst.target;
    std::vector<u64> dp(static_cast<std::size_t>(t) + 1, 0);
    dp[0] = 1 % field.modulus();
    for (u64 s : inst.items) {
        if (s == 0) throw NonPositiveItem("items must be positive");
        if (s > t) continue;
        for (u64 i = t; i >= s; --i)  // descending, so each item is used at most once
            dp[i] = field.add(dp[i], dp[i - s]);
    }
    return ModPoly(std::move(dp), field);
}

std::vector<mpz_class> dp_count_exact(const Instance& inst, std::size_t max_items) {
    if (inst.items.size() > max_items)
        throw InstanceTooLarge("exact dynamic program limited to " + std::to_string(max_items) +
                               " items, got " + std::to_string(inst.items.size()));
    const u64 t = inst.target;
    std::vector<mpz_class> dp(static_cast<std::size_t>(t) + 1, mpz_class(0));
    dp[0] = 1;
    for (u64 s : inst.items) {
        if (s == 0) throw NonPositiveItem("items must be positive");
        if (s > t) continue;
        for (u64 i = t; i >= s; --i) dp[i] += dp[i - s];
    }
    return dp;
}

bool brute_force_decide(const Instance& inst, std::size_t max_items) {
    const std::size_t n = inst.items.size();
    if (n > max_items || n > 62)
        throw InstanceTooLarge("subset enumeration limited to " + std::to_string(max_items) +
                               " items, got " + std::to_string(n));
    for (u64 s : inst.items)
        if (s == 0) throw NonPositiveItem("items must be positive");
    if (inst.target == 0) return true;  // empty subset
    // Gray-code walk: step k toggles item countr_zero(k), visiting every
    // nonempty subset once with O(1) work per step.
    u128 sum = 0;
    std::vector<bool> in(n, false);
    for (u64 k = 1; k < (u64{1} << n); ++k) {
        const int b = std::countr_zero(k);
        if (in[b]) {
            sum -= inst.items[b];
            in[b] = false;
        } else {
            sum += inst.items[b];
            in[b] = true;
        }
        if (sum == inst.target) return true;
    }
    return false;
}

}  // namespace ssum
