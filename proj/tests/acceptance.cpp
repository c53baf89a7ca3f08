// Acceptance gate: one self-contained check per criterion, one PASS/FAIL line
// each. Exit code is the number of failed criteria. Run with no arguments for
// all seven, or pass a subset of indices (as the ctest entries do).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ssum/field.hpp"
#include "ssum/ntt.hpp"
#include "ssum/oracle.hpp"
#include "ssum/poly.hpp"
#include "ssum/series_exp.hpp"
#include "ssum/subset_sum.hpp"

using namespace ssum;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

Instance random_instance(std::mt19937_64& rng, std::size_t max_n, u64 max_t) {
    Instance inst;
    inst.target = rng() % (max_t + 1);
    inst.items.resize(rng() % (max_n + 1));
    // Mix dense small items with target-scaled ones so both answers occur.
    const u64 hi = std::max<u64>(1, (rng() % 3 == 0) ? 30 : 2 * inst.target + 1);
    for (auto& s : inst.items) s = 1 + rng() % hi;
    return inst;
}

std::vector<u64> random_residues(std::mt19937_64& rng, std::size_t n, u64 mod) {
    std::vector<u64> v(n);
    for (auto& x : v) x = rng() % mod;
    return v;
}

// --- 1. Oracle congruence: pipeline == DP at every index -------------------

Outcome criterion1() {
    std::mt19937_64 rng(0xACC1);
    const int kInstances = 500, kPrimesEach = 5;
    for (int i = 0; i < kInstances; ++i) {
        const Instance inst = random_instance(rng, 64, 2048);
        for (int r = 0; r < kPrimesEach; ++r) {
            const u64 p = PrimeSampler(inst.target + 1, (u64{1} << 31) - 1, rng()).sample();
            const PrimeField field(p, inst.target);
            if (coefficients_mod_p(inst, field).coeffs != dp_count_mod_p(inst, field).coeffs) {
                std::ostringstream ss;
                ss << "mismatch at instance " << i << " (n=" << inst.items.size()
                   << ", t=" << inst.target << ", p=" << p << ")";
                return {false, ss.str()};
            }
        }
    }
    return {true, "500 instances x 5 primes in (t, 2^31): all 2500 coefficient tables equal"};
}

// --- 2. Exp backend equivalence + algebraic identities ---------------------

Outcome criterion2() {
    std::mt19937_64 rng(0xACC2);
    for (int i = 0; i < 200; ++i) {
        const std::size_t t = rng() % 513;
        const PrimeField f(PrimeSampler(t + 1, u64{1} << 31, rng()).sample(), t);
        std::vector<u64> c = random_residues(rng, t + 1, f.modulus());
        c[0] = 0;
        const ModPoly fx(std::move(c), f);
        if (exp_series(fx, t).coeffs != exp_series_naive(fx, t).coeffs) {
            return {false, "fast/naive mismatch at t=" + std::to_string(t) + ", p=" +
                               std::to_string(f.modulus())};
        }
    }
    for (int i = 0; i < 100; ++i) {
        const std::size_t t = 1 + rng() % 512;
        const PrimeField f(PrimeSampler(t + 1, u64{1} << 31, rng()).sample(), t);
        std::vector<u64> ac = random_residues(rng, t + 1, f.modulus());
        std::vector<u64> bc = random_residues(rng, t + 1, f.modulus());
        ac[0] = bc[0] = 0;
        std::vector<u64> sum(t + 1), neg(t + 1);
        for (std::size_t k = 0; k <= t; ++k) {
            sum[k] = f.add(ac[k], bc[k]);
            neg[k] = f.neg(ac[k]);
        }
        const ModPoly a(std::move(ac), f), b(std::move(bc), f);
        const auto ea = exp_series(a, t), eb = exp_series(b, t);
        const auto prod = multiply(ea, eb);
        const auto esum = exp_series(ModPoly(std::move(sum), f), t);
        for (std::size_t k = 0; k <= t; ++k)
            if (esum.coeffs[k] != prod.coeffs[k])
                return {false, "exp(a+b) != exp(a)exp(b) at t=" + std::to_string(t)};
        const auto unit = multiply(ea, exp_series(ModPoly(std::move(neg), f), t));
        for (std::size_t k = 0; k <= t; ++k)
            if (unit.coeffs[k] != (k == 0 ? 1 : 0))
                return {false, "exp(f)exp(-f) != 1 at t=" + std::to_string(t)};
    }
    return {true, "200 fast/naive agreements (t <= 512) + 100 identity pairs: exact"};
}

// --- 3. Multiplication exactness and transform roundtrip -------------------

Outcome criterion3() {
    std::mt19937_64 rng(0xACC3);
    const std::vector<u64> pinned = {2, 3, 4611686018427387847ULL};  // ends of the range
    for (int i = 0; i < 100; ++i) {
        const u64 p = i < static_cast<int>(pinned.size())
                          ? pinned[i]
                          : PrimeSampler(2, (u64{1} << 62) - 1, rng()).sample();
        const PrimeField f(p);
        const ModPoly a(random_residues(rng, 1 + rng() % 257, p), f);
        const ModPoly b(random_residues(rng, 1 + rng() % 257, p), f);
        if (multiply_ntt(a, b).coeffs != multiply_schoolbook(a, b).coeffs)
            return {false, "product mismatch at p=" + std::to_string(p)};
    }
    const NttPlan plan(std::size_t{1} << 16);
    int sizes = 0;
    for (std::size_t n = 1; n <= (std::size_t{1} << 16); n <<= 1, ++sizes) {
        for (int m = 0; m < 3; ++m) {
            const std::vector<u64> v = random_residues(rng, n, kNttModuli[m].prime);
            if (ntt_inverse(ntt_forward(v, plan, m), plan, m) != v)
                return {false, "roundtrip failed at size " + std::to_string(n) + ", modulus " +
                                   std::to_string(m)};
        }
    }
    return {true, "100 products (p up to 2^62) match schoolbook; roundtrip exact at " +
                      std::to_string(sizes) + " sizes x 3 moduli"};
}

// --- 4. Decision correctness: one-sided error ------------------------------

Outcome criterion4() {
    std::mt19937_64 rng(0xACC4);
    const int kInstances = 10000;
    const int kFalseNegBudget = 10;  // pinned tolerance; expected ~0
    int false_neg = 0, true_yes = 0;
    for (int i = 0; i < kInstances; ++i) {
        const Instance inst = random_instance(rng, 20, 200);
        const bool truth = dp_count_exact(inst)[inst.target] > 0;
        const Decision d = decide(inst, rng(), 1);
        if (d.yes && !truth) {
            std::ostringstream ss;
            ss << "FALSE POSITIVE at instance " << i << " (n=" << inst.items.size()
               << ", t=" << inst.target << ") -- one-sidedness violated";
            return {false, ss.str()};
        }
        if (!d.yes && truth) ++false_neg;
        if (truth) ++true_yes;
    }
    std::ostringstream ss;
    ss << kInstances << " instances (" << true_yes << " truly YES): 0 false positives, "
       << false_neg << " false negatives (budget " << kFalseNegBudget << ")";
    return {false_neg <= kFalseNegBudget, ss.str()};
}

// --- 5. Primality and sampling uniformity -----------------------------------

Outcome criterion5() {
    const std::size_t kSieveLimit = 1000000;
    std::vector<bool> composite(kSieveLimit, false);
    for (std::size_t i = 2; i * i < kSieveLimit; ++i)
        if (!composite[i])
            for (std::size_t j = i * i; j < kSieveLimit; j += i) composite[j] = true;
    for (u64 q = 0; q < kSieveLimit; ++q)
        if (is_prime(q) != (q >= 2 && !composite[q]))
            return {false, "is_prime disagrees with the sieve at " + std::to_string(q)};

    const u64 kLo = 100, kHi = 10000;
    std::vector<u64> cell(kHi + 1, 0);  // cell index by value; primes only
    std::size_t n_primes = 0;
    for (u64 q = kLo; q <= kHi; ++q)
        if (!composite[q]) ++n_primes;
    const int kDraws = 100000;
    PrimeSampler sampler(kLo, kHi, 0xACC5);
    for (int i = 0; i < kDraws; ++i) ++cell[sampler.sample()];

    const double expected = static_cast<double>(kDraws) / static_cast<double>(n_primes);
    double chi2 = 0;
    for (u64 q = kLo; q <= kHi; ++q) {
        if (composite[q]) {
            if (cell[q] != 0) return {false, "sampler returned composite " + std::to_string(q)};
            continue;
        }
        const double diff = static_cast<double>(cell[q]) - expected;
        chi2 += diff * diff / expected;
    }
    // Wilson-Hilferty upper quantile at significance 1e-3 (pinned tolerance).
    const double df = static_cast<double>(n_primes - 1);
    const double z = 3.090232306167814;  // standard normal quantile at 0.999
    const double a = 2.0 / (9.0 * df);
    const double critical = df * std::pow(1.0 - a + z * std::sqrt(a), 3.0);
    std::ostringstream ss;
    ss << "sieve match below 10^6; chi-square " << static_cast<long>(chi2) << " vs critical "
       << static_cast<long>(critical) << " (df " << static_cast<long>(df) << ", alpha 1e-3)";
    return {chi2 < critical, ss.str()};
}

// --- 6. Scaling: per-doubling growth consistent with t log^2 t -------------

Outcome criterion6() {
    const double kRatioLo = 1.8, kRatioHi = 2.8;  // pinned tolerance
    const double kMaxRunSeconds = 60.0;           // "completes in seconds"
    const std::size_t n = 1000;
    const u64 sizes[3] = {u64{1} << 18, u64{1} << 19, u64{1} << 20};
    double best[3] = {0, 0, 0};
    std::mt19937_64 rng(0xACC6);
    for (int si = 0; si < 3; ++si) {
        const u64 t = sizes[si];
        Instance inst;
        inst.target = t;
        inst.items.resize(n);
        for (auto& s : inst.items) s = 1 + rng() % t;
        const PrimeField field(sample_working_prime(n, t, rng()), t);
        double fastest = 1e100;
        for (int rep = 0; rep < 3; ++rep) {  // min-of-3 against scheduler noise
            const auto t0 = std::chrono::steady_clock::now();
            const ModPoly coeffs = coefficients_mod_p(inst, field);
            const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
            fastest = std::min(fastest, dt.count());
            if (coeffs.coeffs.size() != t + 1) return {false, "unexpected table length"};
        }
        best[si] = fastest;
        if (fastest > kMaxRunSeconds) {
            std::ostringstream ss;
            ss << "run at t=2^" << (18 + si) << " took " << fastest << "s (> " << kMaxRunSeconds
               << "s)";
            return {false, ss.str()};
        }
    }
    const double r1 = best[1] / best[0];
    const double r2 = best[2] / best[1];
    std::ostringstream ss;
    ss.setf(std::ios::fixed);
    ss.precision(2);
    ss << "min-of-3 pipeline times " << best[0] << "s / " << best[1] << "s / " << best[2]
       << "s (t=2^18,19,20); doubling ratios " << r1 << ", " << r2 << " vs [" << kRatioLo << ", "
       << kRatioHi << "]";
    const bool ok = r1 >= kRatioLo && r1 <= kRatioHi && r2 >= kRatioLo && r2 <= kRatioHi;
    return {ok, ss.str()};
}

// --- 7. Knapsack prefix sums ------------------------------------------------

Outcome criterion7() {
    std::mt19937_64 rng(0xACC7);
    for (int i = 0; i < 100; ++i) {
        const Instance inst = random_instance(rng, 32, 512);
        const PrimeField field(PrimeSampler(inst.target + 1, u64{1} << 31, rng()).sample(),
                               inst.target);
        const auto dp = dp_count_mod_p(inst, field);
        u64 prefix = 0;
        for (u64 c : dp.coeffs) prefix = field.add(prefix, c);
        if (knapsack_count_mod_p(inst, field) != prefix)
            return {false, "prefix mismatch (n=" + std::to_string(inst.items.size()) +
                               ", t=" + std::to_string(inst.target) + ")"};
    }
    return {true, "100 instances (n <= 32, t <= 512): knapsack residue equals DP prefix sum"};
}

}  // namespace

int main(int argc, char** argv) {
    using Criterion = Outcome (*)();
    const Criterion table[8] = {nullptr,    criterion1, criterion2, criterion3,
                                criterion4, criterion5, criterion6, criterion7};
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const int k = std::atoi(argv[i]);
        if (k < 1 || k > 7) {
            std::fprintf(stderr, "usage: %s [criterion 1..7]...\n", argv[0]);
            return 64;
        }
        selected.push_back(k);
    }
    if (selected.empty()) selected = {1, 2, 3, 4, 5, 6, 7};

    int failures = 0;
    for (const int k : selected) {
        const auto t0 = std::chrono::steady_clock::now();
        const Outcome o = table[k]();
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        std::printf("criterion %d [%s] %s (%.1fs)\n", k, o.pass ? "PASS" : "FAIL",
                    o.detail.c_str(), dt.count());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures;
}
