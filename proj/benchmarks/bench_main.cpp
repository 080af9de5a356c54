#include <benchmark/benchmark.h>

#include "richardson/classify.hpp"
#include "richardson/verify.hpp"

using namespace richardson;

namespace {

DimensionVector widest(Kind kind, int n) {
    // Borel-like vector: the most blocks, hence the largest rank problems.
    // Even orthogonal totals need d_1 = 2 to stay proper.
    std::vector<int> half;
    if (kind == Kind::orthogonal && n % 2 == 0) {
        half.assign(n / 2 - 2, 1);
        half.insert(half.begin(), 2);
    } else {
        half.assign(n / 2, 1);
    }
    return DimensionVector::from_half(kind, half, n);
}

void BM_full_report(benchmark::State& state) {
    DimensionVector d =
        widest(Kind::orthogonal, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(full_report(d));
}

void BM_density_rank(benchmark::State& state) {
    DimensionVector d =
        widest(Kind::symplectic, static_cast<int>(state.range(0)));
    ParabolicData pd = parabolic_data(d);
    LieElement x = element_from_diagram(assemble(d));
    for (auto _ : state) benchmark::DoNotOptimize(is_dense_in_u(x, pd));
}

void BM_assemble(benchmark::State& state) {
    DimensionVector d = DimensionVector::from_entries(
        Kind::symplectic, {3, 1, 6, 1, 1, 2, 1, 1, 6, 1, 3});
    for (auto _ : state) benchmark::DoNotOptimize(assemble(d));
}

void BM_collapse(benchmark::State& state) {
    Partition a({9, 8, 8, 6, 5, 5, 4, 2, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(collapse(a, Kind::orthogonal));
}

void BM_cross_validate(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(cross_validate(
            Kind::symplectic, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_full_report)->Arg(8)->Arg(10)->Arg(12);
BENCHMARK(BM_density_rank)->Arg(8)->Arg(10)->Arg(12);
BENCHMARK(BM_assemble);
BENCHMARK(BM_collapse);
BENCHMARK(BM_cross_validate)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
