#include <benchmark/benchmark.h>

#include "pvfl/fit.hpp"

static void BM_FitNumeric(benchmark::State& state) {
    const pvfl::FitProblem problem(pvfl::StreamSpec::loss(100, 0.02), pvfl::StreamSpec::loss(100, 0.05),
                                   pvfl::Rate(0.01427), {300.0, 300.0 / static_cast<double>(state.range(0))});
    for (auto _ : state) {
        auto fit = pvfl::fit_numeric(problem);
        benchmark::DoNotOptimize(fit);
    }
}
BENCHMARK(BM_FitNumeric)->Arg(10)->Arg(300)->Arg(3000);

static void BM_FitClosedForm(benchmark::State& state) {
    const pvfl::FitProblem problem(pvfl::StreamSpec::income(100, 0.05), pvfl::StreamSpec::income(100, 0.02),
                                   pvfl::Rate(0.01427));
    for (auto _ : state) {
        auto fit = pvfl::fit_closed_form(problem);
        benchmark::DoNotOptimize(fit);
    }
}
BENCHMARK(BM_FitClosedForm);
