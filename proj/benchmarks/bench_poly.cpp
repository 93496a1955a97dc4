#include <benchmark/benchmark.h>

#include <random>

#include "retractlab/poly.hpp"

using namespace retractlab;

namespace {

Polynomial random_poly(std::mt19937& rng, const Ring& ring, unsigned terms, unsigned max_exp) {
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::vector<Polynomial::Term> out;
    for (unsigned t = 0; t < terms; ++t) {
        ExponentVector e(ring.nvars);
        for (std::size_t i = 0; i < ring.nvars; ++i) e.set(i, exp(rng));
        int c = coeff(rng);
        out.push_back({e, mpq_class(c == 0 ? 1 : c)});
    }
    return Polynomial::from_terms(ring, out);
}

void BM_multiply(benchmark::State& state) {
    Ring ring{FieldSpec::rationals(), 3};
    std::mt19937 rng(1);
    Polynomial f = random_poly(rng, ring, static_cast<unsigned>(state.range(0)), 6);
    Polynomial g = random_poly(rng, ring, static_cast<unsigned>(state.range(0)), 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(f * g);
    }
}
BENCHMARK(BM_multiply)->Arg(8)->Arg(32)->Arg(128);

void BM_multiply_fp(benchmark::State& state) {
    Ring ring{FieldSpec::prime_field(32003), 3};
    std::mt19937 rng(2);
    Polynomial f = random_poly(rng, ring, static_cast<unsigned>(state.range(0)), 6);
    Polynomial g = random_poly(rng, ring, static_cast<unsigned>(state.range(0)), 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(f * g);
    }
}
BENCHMARK(BM_multiply_fp)->Arg(8)->Arg(32)->Arg(128);

void BM_substitute(benchmark::State& state) {
    Ring ring{FieldSpec::rationals(), 3};
    std::mt19937 rng(3);
    Polynomial g = random_poly(rng, ring, 16, static_cast<unsigned>(state.range(0)));
    std::vector<Polynomial> images;
    for (int i = 0; i < 3; ++i) images.push_back(random_poly(rng, ring, 3, 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(substitute(g, images));
    }
}
BENCHMARK(BM_substitute)->Arg(3)->Arg(5);

void BM_exact_divide(benchmark::State& state) {
    Ring ring{FieldSpec::rationals(), 3};
    std::mt19937 rng(4);
    Polynomial h = random_poly(rng, ring, 6, 3);
    Polynomial q = random_poly(rng, ring, static_cast<unsigned>(state.range(0)), 3);
    Polynomial f = q * h;
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_divide(f, h));
    }
}
BENCHMARK(BM_exact_divide)->Arg(8)->Arg(32);

} // namespace
