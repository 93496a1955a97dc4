#include <benchmark/benchmark.h>

#include "retractlab/expmap.hpp"
#include "retractlab/parser.hpp"
#include "retractlab/printer.hpp"
#include "retractlab/subalgebra.hpp"

using namespace retractlab;

namespace {

Polynomial parse_q(const std::string& text, std::size_t n, std::size_t ext = 0) {
    return parse_polynomial(text, FieldSpec::rationals(), default_var_names(n, ext));
}

void BM_dependence_independent_triple(benchmark::State& state) {
    Ring ring{FieldSpec::rationals(), 3};
    SubalgebraPresentation a(ring,
                             {parse_q("x", 3), parse_q("y", 3), parse_q("z", 3)});
    const auto bound = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dependence_bounded(a, bound));
    }
}
BENCHMARK(BM_dependence_independent_triple)->Arg(4)->Arg(6)->Arg(8);

void BM_membership(benchmark::State& state) {
    Ring ring{FieldSpec::rationals(), 3};
    SubalgebraPresentation a(ring, {parse_q("x", 3), parse_q("x^2 - y + z", 3)});
    Polynomial f = parse_q("(x^2 - y + z)^3 - 5*x*(x^2 - y + z) + x^4", 3);
    const auto bound = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(member_bounded(f, a, bound));
    }
}
BENCHMARK(BM_membership)->Arg(4)->Arg(8);

void BM_constants(benchmark::State& state) {
    Ring base{FieldSpec::rationals(), 3};
    ExpMap sigma(base, {parse_q("x", 3, 1), parse_q("y + x*U", 3, 1),
                        parse_q("z + 2*y*U + x*U^2", 3, 1)});
    const auto bound = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(constants_bounded(sigma, bound));
    }
}
BENCHMARK(BM_constants)->Arg(2)->Arg(4)->Arg(6);

} // namespace
