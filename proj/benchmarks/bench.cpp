#include <benchmark/benchmark.h>

#include "icdof/injectivity.hpp"
#include "icdof/random_instances.hpp"
#include "icdof/rng.hpp"
#include "icdof/rv.hpp"
#include "icdof/wset.hpp"

using namespace icdof;

namespace {

void BM_EnumerateMonomials(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        MonomialBasis b = enumerate_monomials(3, d);
        benchmark::DoNotOptimize(b.exponents.data());
    }
    state.SetLabel("phi=" + phi(3, d).get_str());
}
BENCHMARK(BM_EnumerateMonomials)->Arg(1)->Arg(3)->Arg(5)->Arg(7);

void BM_GenerateW(benchmark::State& state) {
    SplitMix64 g(1);
    std::vector<Rat> hvec;
    for (int i = 0; i < 6; ++i) hvec.push_back(random_nonzero_rat(g, 5, 5));
    const long N = state.range(0);
    const int d = static_cast<int>(state.range(1));
    for (auto _ : state) {
        WSetTruncation w = generate_W(N, d, hvec, 3);
        benchmark::DoNotOptimize(&w.values);
    }
}
BENCHMARK(BM_GenerateW)->Args({2, 1})->Args({3, 1})->Args({4, 1});

void BM_Convolution(benchmark::State& state) {
    SplitMix64 g(2);
    const int n = static_cast<int>(state.range(0));
    std::vector<DiscreteRV> rvs;
    std::vector<Rat> coeffs;
    for (int i = 0; i < n; ++i) {
        rvs.push_back(random_rv(g, 8));
        coeffs.push_back(random_nonzero_int_coeff(g));
    }
    for (auto _ : state) {
        DiscreteRV s = linear_combination(coeffs, rvs);
        benchmark::DoNotOptimize(&s);
    }
}
BENCHMARK(BM_Convolution)->Arg(2)->Arg(4)->Arg(6);

void BM_EntropyBits(benchmark::State& state) {
    SplitMix64 g(3);
    std::vector<DiscreteRV> rvs = {random_rv(g, 8), random_rv(g, 8), random_rv(g, 8)};
    std::vector<Rat> coeffs = {Rat(1), Rat(1), Rat(1)};
    DiscreteRV s = linear_combination(coeffs, rvs);
    for (auto _ : state) {
        ApproxReal h = entropy_bits(s);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_EntropyBits);

void BM_InjectivityCheck(benchmark::State& state) {
    SplitMix64 g(4);
    ChannelMatrix m = random_fully_connected(g, 3);
    const long N = state.range(0);
    const int d = static_cast<int>(state.range(1));
    SearchOptions opts;
    opts.workers = static_cast<int>(state.range(2));
    for (auto _ : state) {
        CheckOutcome out = check_user(m, 0, N, d, opts);
        benchmark::DoNotOptimize(&out);
    }
}
BENCHMARK(BM_InjectivityCheck)
    ->Args({3, 1, 1})
    ->Args({3, 1, 4})
    ->Args({4, 1, 1})
    ->Args({4, 1, 4});

void BM_BruteForceOracle(benchmark::State& state) {
    SplitMix64 g(4);
    ChannelMatrix m = random_fully_connected(g, 3);
    const long N = state.range(0);
    for (auto _ : state) {
        CheckOutcome out = brute_force_check(m, 0, N, 1);
        benchmark::DoNotOptimize(&out);
    }
}
BENCHMARK(BM_BruteForceOracle)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
