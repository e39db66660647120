#include <benchmark/benchmark.h>

#include "gaussnet/search.hpp"

using namespace gaussnet;

static void BM_GgqcExhaustive(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const GaussianState s = random_state(n, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ggqc(s).value);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GgqcExhaustive)->DenseRange(3, 11, 2)->Complexity();

static void BM_ClassifyRandomSymplectic(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) {
        const Eigen::Matrix4d s = random_symplectic(2, seed++);
        benchmark::DoNotOptimize(classify(s).residual);
    }
}
BENCHMARK(BM_ClassifyRandomSymplectic);

static void BM_VerifyChain(benchmark::State& state) {
    const NetworkSpec spec = chain_example(0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_network_bound(spec).gap);
    }
}
BENCHMARK(BM_VerifyChain);

static void BM_RandomSearch(benchmark::State& state) {
    SearchConfig config;
    config.spec = chain_example(0.5);
    config.samples = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(random_search_max_ggqc(config).best_value);
    }
}
BENCHMARK(BM_RandomSearch)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
