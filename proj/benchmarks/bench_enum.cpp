#include <benchmark/benchmark.h>

#include "retractlab/monomial.hpp"

using namespace retractlab;

namespace {

void BM_enumerate(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto max_exp = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_monomial_retractions(n, max_exp));
    }
}
BENCHMARK(BM_enumerate)->Args({2, 3})->Args({3, 2})->Args({3, 3});

void BM_enumerate_threads(benchmark::State& state) {
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_monomial_retractions(3, 3, threads));
    }
}
BENCHMARK(BM_enumerate_threads)->Arg(1)->Arg(2)->Arg(4);

void BM_equivalence_sweep(benchmark::State& state) {
    const FieldSpec q = FieldSpec::rationals();
    std::vector<MonomialTuple> tuples = all_monomial_tuples(2, 3);
    for (auto _ : state) {
        std::size_t agreements = 0;
        for (const MonomialTuple& tuple : tuples) {
            ExponentMatrix e = exponent_matrix(tuple);
            bool matrix_route = e.valid && is_idempotent_matrix(e.entries);
            if (matrix_route == is_retraction(to_endo(tuple, q)).is_retraction) ++agreements;
        }
        benchmark::DoNotOptimize(agreements);
    }
}
BENCHMARK(BM_equivalence_sweep);

} // namespace

BENCHMARK_MAIN();
