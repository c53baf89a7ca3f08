#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ssum {

// Error types are named after the condition they report; every throw site in
// the library uses one of these (or a plain std:: exception for programmer
// errors such as mismatched fields).

// Multiplicative inverse of the zero residue was requested.
struct ZeroInverse : std::domain_error {
    ZeroInverse() : std::domain_error("zero residue has no inverse") {}
};

// An inverse-table cap at least as large as the modulus was requested.
struct CapExceedsModulus : std::invalid_argument {
    explicit CapExceedsModulus(const std::string& msg) : std::invalid_argument(msg) {}
};

// Rejection sampling exhausted its retry budget without hitting a prime.
struct NoPrimeFound : std::runtime_error {
    explicit NoPrimeFound(const std::string& msg) : std::runtime_error(msg) {}
};

// A transform (or a product that would need one) exceeds the supported size.
struct SizeOverflow : std::length_error {
    explicit SizeOverflow(const std::string& msg) : std::length_error(msg) {}
};

// Series exponential of a series with nonzero constant term was requested.
struct NonzeroConstantTerm : std::invalid_argument {
    NonzeroConstantTerm() : std::invalid_argument("series exp requires zero constant term") {}
};

// The field modulus is too small for the requested truncation order.
struct FieldTooSmall : std::invalid_argument {
    explicit FieldTooSmall(const std::string& msg) : std::invalid_argument(msg) {}
};

// An instance contained an item outside [1, 2^62].
struct NonPositiveItem : std::invalid_argument {
    explicit NonPositiveItem(const std::string& msg) : std::invalid_argument(msg) {}
};

// An exact oracle was asked to handle more items than it enumerates.
struct InstanceTooLarge : std::invalid_argument {
    explicit InstanceTooLarge(const std::string& msg) : std::invalid_argument(msg) {}
};

// Instance input could not be parsed; token_index is 1-based.
struct ParseError : std::runtime_error {
    std::size_t token_index;
    ParseError(std::size_t index, const std::string& msg)
        : std::runtime_error("token " + std::to_string(index) + ": " + msg),
          token_index(index) {}
};

// A decision round could not obtain a working prime.
struct PrimeSamplingFailed : std::runtime_error {
    explicit PrimeSamplingFailed(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ssum
