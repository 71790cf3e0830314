#include <benchmark/benchmark.h>

#include "qfl/counts.hpp"
#include "qfl/eqsym.hpp"
#include "qfl/families.hpp"
#include "qfl/flags.hpp"
#include "qfl/forest_poly.hpp"
#include "qfl/gkm.hpp"
#include "qfl/noncrossing.hpp"
#include "qfl/schubert.hpp"
#include "qfl/series.hpp"

using namespace qfl;

static void BM_EnumerateNc(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_nc(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_EnumerateNc)->DenseRange(6, 10, 2);

static void BM_NormalForms(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_normal_forms(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_NormalForms)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_ForestPolys(benchmark::State& st) {
    int n = static_cast<int>(st.range(0));
    auto forests = enumerate_forests(n);
    for (auto _ : st) {
        clear_forest_poly_cache();
        for (const auto& f : forests) benchmark::DoNotOptimize(forest_poly_double(f, n));
    }
    st.counters["forests"] = static_cast<double>(forests.size());
}
BENCHMARK(BM_ForestPolys)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_Schubert(benchmark::State& st) {
    auto w0 = Permutation::longest(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(schubert_double(w0));
}
BENCHMARK(BM_Schubert)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);

static void BM_PhiForest(benchmark::State& st) {
    int n = static_cast<int>(st.range(0));
    auto forests = enumerate_forests(n);
    auto f = schubert_double(Permutation::longest(n));
    for (auto _ : st)
        for (const auto& F : forests) benchmark::DoNotOptimize(phi_forest(F, f));
}
BENCHMARK(BM_PhiForest)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_CanonicalForm(benchmark::State& st) {
    std::mt19937_64 rng(1);
    auto m = random_flag(static_cast<int>(st.range(0)), rng);
    for (auto _ : st) benchmark::DoNotOptimize(flag_canonical_form(m));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

static void BM_PluckerSupport(benchmark::State& st) {
    auto forests = enumerate_bnfor(static_cast<int>(st.range(0)));
    auto m = sample_orbit_point(forests.back(), 1);
    for (auto _ : st) benchmark::DoNotOptimize(plucker_support(m));
}
BENCHMARK(BM_PluckerSupport)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);

static void BM_FlowupBasis(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(forest_flowup_basis(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_FlowupBasis)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_SeriesNewton(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(series_G(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_SeriesNewton)->Arg(7)->Arg(kMaxSeriesOrder)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
