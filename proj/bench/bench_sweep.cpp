// Serial reference vs OpenMP grid sweep on the universal-bounds family.

#include <benchmark/benchmark.h>

#include "pcf/grid.hpp"
#include "pcf/harness.hpp"

namespace {

void sweep(benchmark::State& state, pcf::ExecutionPolicy policy) {
    const pcf::Grid grid{pcf::default_n_values(), pcf::progression(-30.0, 30.0, 0.5)};
    pcf::SweepOptions opts;
    opts.policy = policy;
    for (auto _ : state) {
        auto report = pcf::verify(pcf::TheoremId::eso, grid, opts);
        benchmark::DoNotOptimize(report.min_margin);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(grid.n_values.size() * grid.x_values.size()));
}

void BM_SweepSerial(benchmark::State& state) { sweep(state, pcf::ExecutionPolicy::serial); }
void BM_SweepParallel(benchmark::State& state) { sweep(state, pcf::ExecutionPolicy::parallel); }

}  // namespace

BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_MAIN();
