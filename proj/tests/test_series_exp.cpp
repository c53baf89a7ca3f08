#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "ssum/field.hpp"
#include "ssum/series_exp.hpp"

using namespace ssum;

namespace {

ModPoly truncated(const ModPoly& f, std::size_t t) {
    std::vector<u64> c(f.coeffs.begin(),
                       f.coeffs.begin() + std::min(f.coeffs.size(), t + 1));
    c.resize(t + 1, 0);
    return ModPoly(std::move(c), *f.field);
}

ModPoly random_series(std::mt19937_64& rng, std::size_t len, const PrimeField& f) {
    std::vector<u64> c(len, 0);
    for (std::size_t i = 1; i < len; ++i) c[i] = rng() % f.modulus();
    return ModPoly(std::move(c), f);  // constant term zero
}

u64 random_prime_above(std::mt19937_64& rng, u64 lo, u64 hi) {
    return PrimeSampler(lo, hi, rng()).sample();
}

}  // namespace

TEST_CASE("pinned expansions") {
    const PrimeField f7(7), f5(5), f11(11), f101(101);

    const ModPoly zero({}, f7);
    CHECK(exp_series(zero, 5).coeffs == std::vector<u64>{1, 0, 0, 0, 0, 0});
    CHECK(exp_series(ModPoly({0, 0, 0}, f7), 2).coeffs == std::vector<u64>{1, 0, 0});

    // exp(x) = 1 + x + x^2/2 + x^3/6: mod 7 the last two are 4 and 6.
    CHECK(exp_series(ModPoly({0, 1}, f7), 3).coeffs == std::vector<u64>{1, 1, 4, 6});
    CHECK(exp_series_naive(ModPoly({0, 1}, f7), 3).coeffs == std::vector<u64>{1, 1, 4, 6});

    // exp(x) mod 11 to order 4: 1/2 = 6, 1/6 = 2, 1/24 = 6.
    CHECK(exp_series_naive(ModPoly({0, 1}, f11), 4).coeffs == std::vector<u64>{1, 1, 6, 2, 6});

    // exp(2x + 4x^2) mod 5 to order 2: 1 + 2x + (4 + 2)x^2 = 1 + 2x + x^2.
    CHECK(exp_series(ModPoly({0, 2, 4}, f5), 2).coeffs == std::vector<u64>{1, 2, 1});

    CHECK(exp_series(ModPoly({0, 1}, f101), 0).coeffs == std::vector<u64>{1});
}

TEST_CASE("input validation") {
    const PrimeField f5(5);
    CHECK_THROWS_AS(exp_series(ModPoly({1, 1}, f5), 3), NonzeroConstantTerm);
    CHECK_THROWS_AS(exp_series_naive(ModPoly({2}, f5), 1), NonzeroConstantTerm);
    CHECK_THROWS_AS(exp_series(ModPoly({0, 1}, f5), 5), FieldTooSmall);  // needs t < p
    CHECK_THROWS_AS(exp_series_naive(ModPoly({0, 1}, f5), 7), FieldTooSmall);
    CHECK_NOTHROW(exp_series(ModPoly({0, 1}, f5), 4));
}

TEST_CASE("length conventions: zero-padding and truncation of the input") {
    const PrimeField f(1009);
    const ModPoly short_f({0, 3}, f);
    const ModPoly padded_f({0, 3, 0, 0, 0, 0, 0}, f);
    const ModPoly long_f({0, 3, 0, 0, 0, 0, 0, 17, 29}, f);  // terms above x^t are ignored
    const auto a = exp_series(short_f, 6);
    CHECK(a.coeffs.size() == 7);
    CHECK(a.coeffs == exp_series(padded_f, 6).coeffs);
    CHECK(a.coeffs == exp_series(long_f, 6).coeffs);
}

TEST_CASE("fast and naive backends agree on random series") {
    std::mt19937_64 rng(0x5eed2001);
    for (int it = 0; it < 40; ++it) {
        const std::size_t t = rng() % 400;
        const u64 p = random_prime_above(rng, t + 1, (u64{1} << 31));
        const PrimeField f(p);
        const ModPoly fx = random_series(rng, t + 1, f);
        CHECK(exp_series(fx, t).coeffs == exp_series_naive(fx, t).coeffs);
    }
    // Huge moduli exercise the reduction into the transform primes.
    for (u64 p : {4611686018427387847ULL, 18446744073709551557ULL}) {
        const PrimeField f(p);
        for (int it = 0; it < 4; ++it) {
            const std::size_t t = 150 + rng() % 250;
            const ModPoly fx = random_series(rng, t + 1, f);
            CHECK(exp_series(fx, t).coeffs == exp_series_naive(fx, t).coeffs);
        }
    }
}

TEST_CASE("backends agree at transform-heavy sizes") {
    std::mt19937_64 rng(0x5eed2002);
    const std::size_t t = 3000;
    const PrimeField f(random_prime_above(rng, t + 1, (u64{1} << 40)));
    const ModPoly fx = random_series(rng, t + 1, f);
    CHECK(exp_series(fx, t).coeffs == exp_series_naive(fx, t).coeffs);
}

TEST_CASE("exponential is a homomorphism from + to *") {
    std::mt19937_64 rng(0x5eed2003);
    for (int it = 0; it < 15; ++it) {
        const std::size_t t = 1 + rng() % 200;
        const PrimeField f(random_prime_above(rng, t + 1, (u64{1} << 31)));
        const ModPoly a = random_series(rng, t + 1, f);
        const ModPoly b = random_series(rng, t + 1, f);
        std::vector<u64> sum(t + 1);
        for (std::size_t i = 0; i <= t; ++i) sum[i] = f.add(a.coeffs[i], b.coeffs[i]);
        const auto lhs = exp_series(ModPoly(sum, f), t);
        const auto rhs = truncated(multiply(exp_series(a, t), exp_series(b, t)), t);
        CHECK(lhs.coeffs == rhs.coeffs);

        std::vector<u64> neg(t + 1);
        for (std::size_t i = 0; i <= t; ++i) neg[i] = f.neg(a.coeffs[i]);
        const auto unit = truncated(multiply(exp_series(a, t), exp_series(ModPoly(neg, f), t)), t);
        std::vector<u64> one(t + 1, 0);
        one[0] = 1;
        CHECK(unit.coeffs == one);
    }
}

TEST_CASE("monomial input gives c^i / i!") {
    const PrimeField f(97);
    const u64 c = 5;
    const auto g = exp_series(ModPoly({0, c}, f), 20);
    u64 factorial_inv = 1, power = 1;
    for (std::size_t i = 1; i <= 20; ++i) {
        factorial_inv = f.mul(factorial_inv, f.inv(i));
        power = f.mul(power, c);
        CHECK(g.coeffs[i] == f.mul(power, factorial_inv));
    }
}

TEST_CASE("deterministic across calls") {
    std::mt19937_64 rng(0x5eed2004);
    const PrimeField f(1048583);
    const ModPoly fx = random_series(rng, 1201, f);
    CHECK(exp_series(fx, 1200).coeffs == exp_series(fx, 1200).coeffs);
}
