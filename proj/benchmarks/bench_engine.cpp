#include "jetcoh/catalogue.hpp"
#include "jetcoh/corrections.hpp"

#include <benchmark/benchmark.h>

using namespace jetcoh;

namespace {

DiffExpr J(Family f, int n) { return DiffExpr(JetSymbol{f, n}); }

// a dense-ish polynomial in a handful of jets
DiffExpr sample(int k) {
    DiffExpr e;
    for (int i = 0; i < k; ++i)
        e += DiffExpr(make_rational(i + 1, i + 2)) * J(Family::f, i % 5) * J(Family::T, (i * 3) % 4) +
             J(Family::R, i % 3) * J(Family::g, (i + 2) % 6);
    return e;
}

void BM_Multiply(benchmark::State& st) {
    const DiffExpr a = sample(static_cast<int>(st.range(0))), b = sample(static_cast<int>(st.range(0)) + 1);
    for (auto _ : st) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->Arg(4)->Arg(16)->Arg(32);

void BM_TotalDerivative(benchmark::State& st) {
    const DiffExpr a = sample(16) * sample(8);
    for (auto _ : st) benchmark::DoNotOptimize(total_derivative(a, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_TotalDerivative)->Arg(1)->Arg(3);

// fresh frame each round so the binding cache is part of the cost
void BM_PushforwardDet(benchmark::State& st) {
    const int q = static_cast<int>(st.range(0));
    const DiffExpr d = det_expr(q - 1, q);
    for (auto _ : st) {
        ChartFrame frame;
        benchmark::DoNotOptimize(pushforward(d, frame));
    }
}
BENCHMARK(BM_PushforwardDet)->Arg(3)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CeDifferential(benchmark::State& st) {
    const CatalogueEntry e = catalogue(Generator::c5, Form::connection);
    for (auto _ : st) benchmark::DoNotOptimize(ce_differential(e.cochain));
}
BENCHMARK(BM_CeDifferential)->Unit(benchmark::kMillisecond);

void BM_SolveC5(benchmark::State& st) {
    const Cochain2 symbol = Cochain2::make(det_expr(3, 4), 5, Coefficient(5));
    for (auto _ : st) benchmark::DoNotOptimize(solve_corrections(symbol, 5));
}
BENCHMARK(BM_SolveC5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
