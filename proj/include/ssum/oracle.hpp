#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "ssum/poly.hpp"
#include "ssum/subset_sum.hpp"

namespace ssum {

// Independent reference implementations used to validate the generating-
// function pipeline. All are exact and deterministic.

// Textbook 0/1 dynamic program: coefficient i of the result is the number of
// subsets summing to i, mod p. O(n * target) field additions.
ModPoly dp_count_mod_p(const Instance& inst, const PrimeField& field);

// Same dynamic program with exact big-integer counts. Guarded by an item
// bound (counts can reach 2^n). Throws InstanceTooLarge above it.
std::vector<mpz_class> dp_count_exact(const Instance& inst, std::size_t max_items = 64);

// Gray-code enumeration of all subsets. Throws InstanceTooLarge above the
// item bound.
bool brute_force_decide(const Instance& inst, std::size_t max_items = 24);

}  // namespace ssum
