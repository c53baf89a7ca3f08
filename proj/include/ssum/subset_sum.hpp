#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ssum/common.hpp"
#include "ssum/field.hpp"
#include "ssum/poly.hpp"

namespace ssum {

// A SubsetSum instance: multiset of positive items and a target. The counting
// pipeline supports targets up to 2^26 - 1 (transform length bound).
struct Instance {
    std::vector<u64> items;
    u64 target = 0;
};

// Multiplicity histogram of the item sizes that can still matter: counts[s]
// is the number of items equal to s for 1 <= s <= target; larger items are
// only tallied in dropped. Throws NonPositiveItem on a zero item.
struct ItemHistogram {
    std::vector<u64> counts;  // size target + 1; index 0 unused
    u64 dropped = 0;
    u64 target = 0;
};

ItemHistogram build_histogram(const Instance& inst);

// Truncated logarithm of the instance's product generating function
// prod_s (1 + x^s)^{counts[s]}: coefficient of x^m is
// sum over (s, j) with j*s = m of counts[s] * (-1)^{j-1} / j. Length
// target + 1. Throws FieldTooSmall unless p > target.
ModPoly build_log_series(const ItemHistogram& hist, const PrimeField& field);

// Coefficients of prod_i (1 + x^{s_i}) mod x^{target+1} over the field:
// coefficient m counts the subsets summing to m, reduced mod p. Computed as
// exp of the log series. Throws FieldTooSmall unless p > target, SizeOverflow
// when target is beyond the supported transform length.
ModPoly coefficients_mod_p(const Instance& inst, const PrimeField& field);

// Number of subsets hitting the target exactly, mod p.
u64 count_mod_p(const Instance& inst, const PrimeField& field);

// Number of subsets with sum <= target, mod p (prefix sum of coefficients;
// the empty subset always counts).
u64 knapsack_count_mod_p(const Instance& inst, const PrimeField& field);

// Prime sampling interval for a decision round: [t+1, min(max((n+t)^3,
// 2t+64), 2^62)]. The lower end makes a nonzero subset count visible mod p;
// the cubic upper end keeps the chance that p divides a nonzero count
// below 1/(n+t) per round; the floor keeps tiny instances' intervals dense
// enough in primes; the cap keeps arithmetic in 64 bits.
std::pair<u64, u64> prime_interval(std::size_t n, u64 t);

// Sample a prime from prime_interval. Wraps retry exhaustion (which cannot
// happen for intervals this wide, but is budgeted) in PrimeSamplingFailed.
u64 sample_working_prime(std::size_t n, u64 t, u64 seed);

struct DecisionRound {
    u64 prime;
    u64 count_mod_p;
};

// One-sided randomized decision. rounds holds the executed rounds in order;
// execution stops at the first nonzero count. yes holds exactly when some
// executed round saw a nonzero count, so YES answers are always correct and
// a NO is wrong only if every sampled prime divides the true nonzero count.
struct Decision {
    bool yes = false;
    std::vector<DecisionRound> rounds;
    u64 seed = 0;
    unsigned repeats = 1;  // requested; rounds.size() may be smaller
};

// Runs up to `repeats` rounds with per-round seeds derived from `seed`.
// target == 0 is answered YES immediately (empty subset), with no sampling.
Decision decide(const Instance& inst, u64 seed, unsigned repeats = 1);

}  // namespace ssum
