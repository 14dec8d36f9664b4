// Microbenchmarks for the numerical hot spots: eigendecomposition with
// canonical phase fixing, tensor powers, typical-set enumeration, the
// capacity optimizer, and a small greedy code build.

#include <benchmark/benchmark.h>

#include "cqcap/channel.hpp"
#include "cqcap/coding.hpp"
#include "cqcap/operators.hpp"
#include "cqcap/projectors.hpp"
#include "cqcap/random.hpp"
#include "cqcap/suites.hpp"
#include "cqcap/types.hpp"

namespace {

void bm_eig_decompose(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    cqcap::RandomStream rng(1);
    const auto rho = rng.mixed_state(d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cqcap::eig_decompose(cqcap::HermitianOperator(rho.mat())));
    }
}
BENCHMARK(bm_eig_decompose)->Arg(4)->Arg(16)->Arg(64);

void bm_tensor_power(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    cqcap::RandomStream rng(2);
    const cqcap::Matrix rho = rng.mixed_state(2).mat();
    const std::vector<const cqcap::Matrix*> factors(n, &rho);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cqcap::kron_all(factors));
    }
}
BENCHMARK(bm_tensor_power)->Arg(4)->Arg(8)->Arg(10);

void bm_kron_apply(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    cqcap::RandomStream rng(3);
    const cqcap::Matrix x = rng.contraction(2).mat();
    const std::vector<const cqcap::Matrix*> factors(n, &x);
    const cqcap::Vector v = rng.ket(1 << n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cqcap::kron_apply(factors, v));
    }
}
BENCHMARK(bm_kron_apply)->Arg(8)->Arg(12);

void bm_typical_enumeration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const cqcap::InputDistribution p({0.75, 0.25});
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            cqcap::enumerate_typical_set(cqcap::TypicalSetSpec{p, n, 2.0}));
    }
}
BENCHMARK(bm_typical_enumeration)->Arg(8)->Arg(12);

void bm_capacity(benchmark::State& state) {
    const auto w = cqcap::zero_plus_channel();
    for (auto _ : state) {
        benchmark::DoNotOptimize(cqcap::capacity(w, 1e-9));
    }
}
BENCHMARK(bm_capacity);

void bm_greedy_build(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto w = cqcap::zero_plus_channel();
    const auto p = cqcap::InputDistribution::uniform(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cqcap::greedy_code_build(w, p, n, 0.5, 1.0));
    }
}
BENCHMARK(bm_greedy_build)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
