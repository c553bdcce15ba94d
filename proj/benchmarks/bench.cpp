#include <benchmark/benchmark.h>

#include <random>

#include "sseq/decalage.hpp"

namespace {

using namespace sseq;

IntMatrix random_matrix(std::uint64_t seed, int n, int mag) {
    std::mt19937_64 rng(seed);
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = (int)(rng() % (2 * mag + 1)) - mag;
    return m;
}

void BM_hnf(benchmark::State& state) {
    IntMatrix m = random_matrix(1, (int)state.range(0), 9);
    for (auto _ : state) benchmark::DoNotOptimize(hnf(m));
}
BENCHMARK(BM_hnf)->Arg(8)->Arg(16)->Arg(32);

void BM_snf(benchmark::State& state) {
    IntMatrix m = random_matrix(2, (int)state.range(0), 9);
    for (auto _ : state) benchmark::DoNotOptimize(snf(m));
}
BENCHMARK(BM_snf)->Arg(8)->Arg(16);

void BM_pages(benchmark::State& state) {
    FilteredComplex f = random_filtered_instance(3, SizeParams{});
    for (auto _ : state) benchmark::DoNotOptimize(pages(f, default_r_max(f)));
}
BENCHMARK(BM_pages);

void BM_pages_from_couple(benchmark::State& state) {
    FilteredComplex f = random_filtered_instance(3, SizeParams{});
    for (auto _ : state) benchmark::DoNotOptimize(pages_from_couple(f, default_r_max(f)));
}
BENCHMARK(BM_pages_from_couple);

}  // namespace

BENCHMARK_MAIN();
