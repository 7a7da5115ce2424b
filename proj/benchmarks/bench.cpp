#include <benchmark/benchmark.h>

#include "sextic/chern.hpp"
#include "sextic/chow.hpp"
#include "sextic/classify.hpp"
#include "sextic/cohomology.hpp"
#include "sextic/verify.hpp"

namespace {

using namespace sextic;

void BM_ChowMul(benchmark::State& state) {
    const ChowClass x = ChowClass::from_terms(
        Variety::F, {{{1, 0}, 3}, {{0, 1}, -2}, {{2, 0}, 5}, {{0, 2}, 7}});
    const ChowClass y = ChowClass::from_terms(
        Variety::F, {{{0, 0}, 1}, {{1, 0}, -4}, {{0, 1}, 6}, {{2, 1}, 2}});
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_ChowMul);

void BM_CohomFRow(benchmark::State& state) {
    for (auto _ : state)
        for (long long a1 = -30; a1 <= 30; ++a1)
            benchmark::DoNotOptimize(cohom_f(a1, 7 - a1));
}
BENCHMARK(BM_CohomFRow);

void BM_ChiUlrich(benchmark::State& state) {
    const auto x = make_rank2({Variety::F, 2, 2}, class_from_beta(4, 4));
    for (auto _ : state) benchmark::DoNotOptimize(chi_f(x));
}
BENCHMARK(BM_ChiUlrich);

void BM_DivisorialTable(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(divisorial_case_table());
}
BENCHMARK(BM_DivisorialTable);

void BM_ClassifyPhi(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(classify_phi());
}
BENCHMARK(BM_ClassifyPhi);

void BM_SplitObstructionSearch(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(split_obstruction_search());
}
BENCHMARK(BM_SplitObstructionSearch);

void BM_VerifyClassifyScope(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(run_verify(VerifyScope::Classify));
}
BENCHMARK(BM_VerifyClassifyScope);

}  // namespace

BENCHMARK_MAIN();
