#include <benchmark/benchmark.h>

#include "segrelab/series.hpp"

using namespace segrelab;

namespace {

TruncatedSeries sample(int order, const BigRational& c0) {
    std::vector<BigRational> c(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) {
        c[static_cast<std::size_t>(i)] = make_rational((i * 7) % 11 - 5, i % 4 + 1);
    }
    c[0] = c0;
    return TruncatedSeries(std::move(c), order);
}

void BM_Multiply(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const auto a = sample(order, 1), b = sample(order, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_Multiply)->RangeMultiplier(2)->Range(8, 64);

void BM_RationalPow(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const auto a = sample(order, 1);
    const BigRational e = make_rational(-7, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rational_pow(a, e));
    }
}
BENCHMARK(BM_RationalPow)->RangeMultiplier(2)->Range(8, 64);

void BM_Reverse(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    auto f = sample(order, 0) + TruncatedSeries::variable(order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reverse(f));
    }
}
BENCHMARK(BM_Reverse)->RangeMultiplier(2)->Range(8, 32);

}  // namespace
