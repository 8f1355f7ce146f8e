#include <benchmark/benchmark.h>

#include "segrelab/scan.hpp"
#include "segrelab/surface.hpp"

using namespace segrelab;

namespace {

void BM_ClosedK3(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(segre_closed(GeometryKind::K3, 3, 5 * k + 4, make_rational(3, 1), k));
    }
}
BENCHMARK(BM_ClosedK3)->DenseRange(2, 10, 4);

void BM_SeriesEnriques(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto b = SurfaceBundle::on(GeometryKind::Enriques, 3, 6, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(segre_series(GeometryKind::Enriques, b, k));
    }
}
BENCHMARK(BM_SeriesEnriques)->DenseRange(2, 10, 4);

void BM_Blowup(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(segre_blowup_k3(40, 4, 5));
    }
}
BENCHMARK(BM_Blowup);

void BM_ScanLemma(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan_lemma({0, 6}, {-6, 6}, {0, 6}, {1, 0, {}}));
    }
}
BENCHMARK(BM_ScanLemma)->Unit(benchmark::kMillisecond);

}  // namespace
