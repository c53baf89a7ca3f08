#pragma once

#include <istream>

#include "ssum/subset_sum.hpp"

namespace ssum {

// Reads an instance as whitespace-separated positive decimal integers (the
// items; possibly none) and attaches the given target. Throws ParseError with
// the 1-based token index for anything that is not an integer in [1, 2^62].
Instance parse_instance(std::istream& in, u64 target);

}  // namespace ssum
