#pragma once

#include <cstddef>

#include "ssum/poly.hpp"

namespace ssum {

// exp(f) mod x^{t+1} for a series f with f(0) = 0, driven by the recurrence
//   g_0 = 1,   g_i = i^{-1} * sum_{j<i} (i-j) f_{i-j} g_j,
// evaluated divide-and-conquer style: finished left halves contribute to the
// right half through one cyclic convolution per segment. Runs in
// O(t log^2 t) field operations. The result has length exactly t + 1; f may
// be shorter (read as zero-padded) or longer (terms above x^t are ignored).
// Throws NonzeroConstantTerm if f(0) != 0 and FieldTooSmall if t >= p (the
// recurrence divides by every index up to t).
ModPoly exp_series(const ModPoly& f, std::size_t t);

// Quadratic evaluation of the same recurrence; reference implementation.
ModPoly exp_series_naive(const ModPoly& f, std::size_t t);

}  // namespace ssum
