// Microbenchmarks pairing each production kernel with its serial reference:
// transform multiply vs schoolbook, divide-and-conquer exp vs the quadratic
// recurrence, and the full counting pipeline vs the dynamic-program oracle.
//
//   ./build/bench/bench_kernels                       # everything
//   ./build/bench/bench_kernels --benchmark_filter=Exp

#include <benchmark/benchmark.h>

#include <cstddef>
#include <random>
#include <vector>

#include "ssum/field.hpp"
#include "ssum/oracle.hpp"
#include "ssum/poly.hpp"
#include "ssum/series_exp.hpp"
#include "ssum/subset_sum.hpp"

namespace {

using namespace ssum;

constexpr u64 kBenchPrime = 4611686018427387847ULL;  // largest prime below 2^62

std::vector<u64> random_residues(std::size_t n, u64 mod, u64 seed) {
    std::mt19937_64 rng(seed);
    std::vector<u64> v(n);
    for (auto& x : v) x = rng() % mod;
    return v;
}

Instance random_instance(std::size_t n, u64 target, u64 seed) {
    std::mt19937_64 rng(seed);
    Instance inst;
    inst.target = target;
    inst.items.resize(n);
    for (auto& s : inst.items) s = 1 + rng() % target;
    return inst;
}

void BM_MultiplySchoolbook(benchmark::State& state) {
    const auto len = static_cast<std::size_t>(state.range(0));
    const PrimeField field(kBenchPrime);
    const ModPoly a(random_residues(len, kBenchPrime, 1), field);
    const ModPoly b(random_residues(len, kBenchPrime, 2), field);
    for (auto _ : state) benchmark::DoNotOptimize(multiply_schoolbook(a, b));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MultiplySchoolbook)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_MultiplyNtt(benchmark::State& state) {
    const auto len = static_cast<std::size_t>(state.range(0));
    const PrimeField field(kBenchPrime);
    const ModPoly a(random_residues(len, kBenchPrime, 1), field);
    const ModPoly b(random_residues(len, kBenchPrime, 2), field);
    for (auto _ : state) benchmark::DoNotOptimize(multiply_ntt(a, b));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MultiplyNtt)->RangeMultiplier(4)->Range(64, 65536)->Complexity();

void BM_ExpSeriesNaive(benchmark::State& state) {
    const auto t = static_cast<std::size_t>(state.range(0));
    const PrimeField field(kBenchPrime, t);
    std::vector<u64> c = random_residues(t + 1, kBenchPrime, 3);
    c[0] = 0;
    const ModPoly f(std::move(c), field);
    for (auto _ : state) benchmark::DoNotOptimize(exp_series_naive(f, t));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExpSeriesNaive)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_ExpSeries(benchmark::State& state) {
    const auto t = static_cast<std::size_t>(state.range(0));
    const PrimeField field(kBenchPrime, t);
    std::vector<u64> c = random_residues(t + 1, kBenchPrime, 3);
    c[0] = 0;
    const ModPoly f(std::move(c), field);
    for (auto _ : state) benchmark::DoNotOptimize(exp_series(f, t));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExpSeries)->RangeMultiplier(4)->Range(64, 65536)->Complexity();

void BM_Pipeline(benchmark::State& state) {
    const auto t = static_cast<u64>(state.range(0));
    const Instance inst = random_instance(1000, t, 4);
    const PrimeField field(kBenchPrime, t);
    for (auto _ : state) benchmark::DoNotOptimize(coefficients_mod_p(inst, field));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Pipeline)->RangeMultiplier(4)->Range(1 << 12, 1 << 18)->Complexity();

void BM_DpOracle(benchmark::State& state) {
    const auto t = static_cast<u64>(state.range(0));
    const Instance inst = random_instance(1000, t, 4);
    const PrimeField field(kBenchPrime, t);
    for (auto _ : state) benchmark::DoNotOptimize(dp_count_mod_p(inst, field));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DpOracle)->RangeMultiplier(4)->Range(1 << 12, 1 << 18)->Complexity();

}  // namespace

BENCHMARK_MAIN();
