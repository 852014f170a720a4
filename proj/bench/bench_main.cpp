#include <benchmark/benchmark.h>

#include "k3/cyclotomic.hpp"
#include "k3/kernels.hpp"
#include "k3/obstruction.hpp"
#include "k3/salem.hpp"

using namespace k3;

namespace {

const IntPoly kLehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};

void BM_SubresultantResultant(benchmark::State& st) {
    const IntPoly& f = cyclotomic(static_cast<uint64_t>(st.range(0)));
    const IntPoly& g = cyclotomic(static_cast<uint64_t>(st.range(0)) - 1);
    for (auto _ : st) benchmark::DoNotOptimize(resultant(f, g));
}

void BM_SylvesterSerial(benchmark::State& st) {
    const IntPoly& f = cyclotomic(static_cast<uint64_t>(st.range(0)));
    const IntPoly& g = cyclotomic(static_cast<uint64_t>(st.range(0)) - 1);
    for (auto _ : st) benchmark::DoNotOptimize(sylvester_resultant_serial(f, g));
}

void BM_SylvesterOmp(benchmark::State& st) {
    const IntPoly& f = cyclotomic(static_cast<uint64_t>(st.range(0)));
    const IntPoly& g = cyclotomic(static_cast<uint64_t>(st.range(0)) - 1);
    for (auto _ : st) benchmark::DoNotOptimize(sylvester_resultant_omp(f, g));
}

void BM_ApostolSweepSerial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(apostol_sweep_serial(static_cast<uint64_t>(st.range(0))));
}

void BM_ApostolSweepOmp(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(apostol_sweep_omp(static_cast<uint64_t>(st.range(0))));
}

void BM_PiSweepSerial(benchmark::State& st) {
    auto ls = c_sets(10).c;
    for (auto _ : st) benchmark::DoNotOptimize(pi_sweep_serial(ls));
}

void BM_PiSweepOmp(benchmark::State& st) {
    auto ls = c_sets(10).c;
    for (auto _ : st) benchmark::DoNotOptimize(pi_sweep_omp(ls));
}

void BM_LehmerVerdict(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(realizable_nonprojective(kLehmer));
}

void BM_ObstructionMap(benchmark::State& st) {
    IntPoly f = pow(IntPoly{-1, 1}, 4) * pow(cyclotomic(12), 2) * cyclotomic(5);
    auto maps = enumerate_index_maps(f, 8, 8, 1);
    for (auto _ : st) benchmark::DoNotOptimize(obstruction_map(f, maps.front()));
}

}  // namespace

BENCHMARK(BM_SubresultantResultant)->Arg(60)->Arg(120)->Arg(210);
BENCHMARK(BM_SylvesterSerial)->Arg(60)->Arg(120)->Arg(210);
BENCHMARK(BM_SylvesterOmp)->Arg(60)->Arg(120)->Arg(210);
BENCHMARK(BM_ApostolSweepSerial)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ApostolSweepOmp)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PiSweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PiSweepOmp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LehmerVerdict)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ObstructionMap)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
