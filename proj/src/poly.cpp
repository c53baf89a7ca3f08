#include "ssum/poly.hpp"

#include <bit>
#include <stdexcept>

#include "ssum/errors.hpp"
#include "ssum/ntt.hpp"

namespace ssum {

namespace {

constexpr std::size_t kSchoolbookCutoff = 64;  // output coefficients

const PrimeField& common_field(const ModPoly& f, const ModPoly& g) {
    if (f.field == nullptr || g.field == nullptr)
        throw std::invalid_argument("polynomial without a field");
    if (f.field->modulus() != g.field->modulus())
        throw std::invalid_argument("operands live in different fields");
    return *f.field;
}

// Residues mod an internal transform modulus, zero-padded to n. Inputs are
// canonical mod p < 2^64 < 4q, so a few conditional subtractions reduce them.
std::vector<u64> reduce_pad(const std::vector<u64>& src, std::size_t n, u64 q) {
    std::vector<u64> out(n, 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
        u64 x = src[i];
        while (x >= q) x -= q;
        out[i] = x;
    }
    return out;
}

}  // namespace

ModPoly multiply_schoolbook(const ModPoly& f, const ModPoly& g) {
    const PrimeField& field = common_field(f, g);
    if (f.coeffs.empty() || g.coeffs.empty()) return ModPoly({}, field);
    std::vector<u64> out(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j)
            out[i + j] = field.add(out[i + j], field.mul(f.coeffs[i], g.coeffs[j]));
    }
    return ModPoly(std::move(out), field);
}

ModPoly multiply_ntt(const ModPoly& f, const ModPoly& g) {
    const PrimeField& field = common_field(f, g);
    if (f.coeffs.empty() || g.coeffs.empty()) return ModPoly({}, field);
    const std::size_t out_len = f.size() + g.size() - 1;
    const NttPlan& plan = NttPlan::shared_for(out_len);
    const std::size_t n = std::bit_ceil(out_len);

    std::vector<u64> res[3];
    for (int m = 0; m < 3; ++m) {
        const u64 q = kNttModuli[m].prime;
        std::vector<u64> fa = reduce_pad(f.coeffs, n, q);
        plan.forward(m, fa);
        std::vector<u64> fb = reduce_pad(g.coeffs, n, q);
        plan.forward(m, fb);
        plan.pointwise_mont(m, fa, fb);
        plan.inverse_conv(m, fa);
        res[m] = std::move(fa);
    }

    const CrtCombiner crt(field.modulus());
    std::vector<u64> out(out_len);
    const u64* r0 = res[0].data();
    const u64* r1 = res[1].data();
    const u64* r2 = res[2].data();
    u64* o = out.data();
    if (out_len >= (std::size_t{1} << 15)) {
#pragma omp parallel for schedule(static)
        for (std::size_t i = 0; i < out_len; ++i) o[i] = crt.combine(r0[i], r1[i], r2[i]);
    } else {
        for (std::size_t i = 0; i < out_len; ++i) o[i] = crt.combine(r0[i], r1[i], r2[i]);
    }
    return ModPoly(std::move(out), field);
}

ModPoly multiply(const ModPoly& f, const ModPoly& g) {
    if (f.coeffs.empty() || g.coeffs.empty()) return multiply_schoolbook(f, g);
    const std::size_t out_len = f.size() + g.size() - 1;
    return out_len < kSchoolbookCutoff ? multiply_schoolbook(f, g) : multiply_ntt(f, g);
}

}  // namespace ssum
