#include "qfaul/parallel.hpp"
#include "qfaul/suites.hpp"

#include <benchmark/benchmark.h>

namespace {

using qfaul::Execution;

Execution exec_of(const benchmark::State &state) {
  return state.range(0) ? Execution::parallel : Execution::serial;
}

void BM_TableDet(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        qfaul::compute_table(qfaul::Family::H, 8, qfaul::Route::det, exec_of(state)));
}
BENCHMARK(BM_TableDet)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TableInvert(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(qfaul::compute_table(
        qfaul::Family::Q, 7, qfaul::Route::invert, exec_of(state)));
}
BENCHMARK(BM_TableInvert)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_LgvBrute(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        qfaul::coefficient_lgv_brute(qfaul::Family::H, 7, 3, exec_of(state)));
}
BENCHMARK(BM_LgvBrute)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SuiteLemma2(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(qfaul::run_suite("lemma2", 6, exec_of(state)));
}
BENCHMARK(BM_SuiteLemma2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
