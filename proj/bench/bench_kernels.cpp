// Serial reference kernels against their OpenMP versions.

#include "lch/dga.hpp"
#include "lch/reps.hpp"

#include <benchmark/benchmark.h>

#include <omp.h>

using namespace lch;

namespace {

const char* K1 = "6,7,4,3,7,5,3,6,4,2,5,1,3,2,5,2,4,6,2";
const char* M942 = "2,1,1,4,5,3,5,3,2,4,3,3,2,4";

// Larger fronts: K1 and torus knots.
FrontDiagram front(int which)
{
    switch (which) {
    case 0: return build_front(parse_plat(K1, 8));
    case 1: return torus_front(5, 8);
    default: return torus_front(7, 12);
    }
}

void BM_dga_serial(benchmark::State& state)
{
    auto fr = front(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(compute_dga_serial(fr, Ring::ZT));
}

void BM_dga_parallel(benchmark::State& state)
{
    auto fr = front(static_cast<int>(state.range(0)));
    omp_set_num_threads(static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(compute_dga(fr, Ring::ZT));
}

void BM_matrep_serial(benchmark::State& state)
{
    Dga g = compute_dga(build_front(parse_plat(M942, 6)), Ring::F2);
    for (auto _ : state) benchmark::DoNotOptimize(search_matrix_rep_serial(g, 2, 100'000'000));
}

void BM_matrep_parallel(benchmark::State& state)
{
    Dga g = compute_dga(build_front(parse_plat(M942, 6)), Ring::F2);
    omp_set_num_threads(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(search_matrix_rep(g, 2, 100'000'000));
}

}  // namespace

BENCHMARK(BM_dga_serial)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dga_parallel)->ArgsProduct({{0, 1, 2}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_matrep_serial)->Iterations(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_matrep_parallel)->Arg(1)->Arg(2)->Arg(4)->Iterations(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
