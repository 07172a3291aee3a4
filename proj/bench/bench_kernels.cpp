#include "hk/certify.hpp"

#include <benchmark/benchmark.h>

using namespace hk;

namespace {

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_closed_subsets(benchmark::State& state, const char* type) {
    RootData rd = root_data(build_root_system(cartan_matrix(type)));
    for (auto _ : state) benchmark::DoNotOptimize(closed_symmetric_subsets(rd, mode(state)));
}

void BM_jacobi(benchmark::State& state, const char* type) {
    ChevalleyAlgebra alg = chevalley(type);
    for (auto _ : state) benchmark::DoNotOptimize(jacobi_violations(alg, mode(state)));
}

void BM_verify_bn(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_bn_suite(2, 3, 4, mode(state)).failures());
}

}  // namespace

BENCHMARK_CAPTURE(BM_closed_subsets, B4, "B4")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_closed_subsets, F4, "F4")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_jacobi, A4, "A4")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_jacobi, B3, "B3")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_bn)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
