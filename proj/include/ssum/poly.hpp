#pragma once

#include <cstddef>
#include <vector>

#include "ssum/common.hpp"
#include "ssum/field.hpp"

namespace ssum {

// Dense polynomial over a PrimeField: coeffs[i] is the coefficient of x^i as
// a canonical residue. Trailing zeros are allowed and never trimmed, so the
// length is structural (degree bound = size() - 1); an empty vector is the
// zero polynomial. The field is borrowed and must outlive the polynomial.
struct ModPoly {
    std::vector<u64> coeffs;
    const PrimeField* field = nullptr;

    ModPoly() = default;
    ModPoly(std::vector<u64> c, const PrimeField& f) : coeffs(std::move(c)), field(&f) {}

    std::size_t size() const noexcept { return coeffs.size(); }
    // Coefficient of x^i, reading past the stored length as zero.
    u64 at(std::size_t i) const noexcept { return i < coeffs.size() ? coeffs[i] : 0; }
};

// Quadratic product; reference implementation for any size.
ModPoly multiply_schoolbook(const ModPoly& f, const ModPoly& g);

// Exact product via the three-modulus transform + CRT. Output length is
// f.size() + g.size() - 1 (empty if either input is empty). Throws
// SizeOverflow when the padded transform would exceed the supported size,
// std::invalid_argument if the operands live in different fields.
ModPoly multiply_ntt(const ModPoly& f, const ModPoly& g);

// Dispatcher: schoolbook below 64 output coefficients, transform otherwise.
ModPoly multiply(const ModPoly& f, const ModPoly& g);

}  // namespace ssum
